// amlab: command-line front end.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad input, 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "amlab/amlab.hpp"
#include "amlab/json.hpp"

namespace {

using amlab::Json;

struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t k = 1;
  std::int64_t c = 1;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::string cover;
  std::uint64_t budget = amlab::kDefaultBudget;
  std::uint64_t seed = 1;
  std::string json_path;
  std::string csv_path;
};

using Rows = std::vector<std::pair<std::string, std::string>>;

struct Outcome {
  bool passed = true;
  Json result = Json::object();
  Rows rows;
};

Json params_json(const std::string& cmd, const RunConfig& cfg) {
  Json j;
  j["p"] = cfg.p;
  if (cmd == "count" || cmd == "orbits" || cmd == "zeta") j["k"] = cfg.k;
  if (cmd == "count" || cmd == "orbits" || cmd == "zeta" || cmd == "quotients" || cmd == "aut-check") j["c"] = cfg.c;
  if (cmd == "quotients") {
    j["a"] = cfg.a;
    j["b"] = cfg.b;
  }
  if (cmd == "genus") j["cover"] = cfg.cover;
  j["budget"] = cfg.budget;
  if (cmd == "verify-theorem") j["seed"] = cfg.seed;
  return j;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Outcome aut_check(const RunConfig& cfg) {
  Outcome o;
  const auto pres = amlab::verify_presentation(cfg.p);
  const amlab::AffineGroup H(cfg.p);
  const auto curve = amlab::AMCurve::make(cfg.p, cfg.c);
  std::uint64_t invariant = 0;
  for (const auto& g : H.elements())
    if (amlab::verify_invariance(H, g, curve)) ++invariant;
  o.passed = pres.passed() && invariant == H.order();
  o.result["presentation"] = amlab::to_json(pres);
  o.result["invariance"] = Json{{"elements_checked", H.order()}, {"elements_invariant", invariant}};
  o.rows.emplace_back("|H|", std::to_string(H.order()));
  for (const auto& c : pres.checks) o.rows.emplace_back(c.identity, c.status ? "holds" : "FAILS");
  o.rows.emplace_back("invariant elements", std::to_string(invariant) + " / " + std::to_string(H.order()));
  return o;
}

Outcome orbits(const RunConfig& cfg) {
  Outcome o;
  const amlab::AffineGroup H(cfg.p);
  const auto curve = amlab::AMCurve::make(cfg.p, cfg.c);
  const auto rep = amlab::short_orbits(curve, H, {H.tau(1, 0), H.tau(0, 1)}, cfg.k, cfg.budget);
  o.passed = rep.orbit_stabilizer_holds;
  o.result = amlab::to_json(rep);
  o.rows.emplace_back("group", "C_p x C_p, order " + std::to_string(rep.group_order));
  o.rows.emplace_back("points", std::to_string(rep.points_enumerated));
  std::string sizes;
  for (auto s : rep.orbit_sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
  o.rows.emplace_back("orbit sizes", sizes);
  for (std::size_t i = 0; i < rep.short_orbits.size(); ++i) {
    const auto& s = rep.short_orbits[i];
    o.rows.emplace_back("short orbit " + std::to_string(i + 1),
                        std::to_string(s.points.size()) + " points from " + s.points.front().to_string() +
                            ", stabilizer order " + std::to_string(s.stabilizer.size()));
  }
  o.rows.emplace_back("orbit-stabilizer", rep.orbit_stabilizer_holds ? "holds" : "FAILS");
  return o;
}

Outcome count(const RunConfig& cfg) {
  Outcome o;
  const auto curve = amlab::AMCurve::make(cfg.p, cfg.c);
  const auto n = amlab::count_points(curve, cfg.k, cfg.budget);
  o.result["field"] = amlab::to_json(amlab::make_field(cfg.p, cfg.k));
  o.result["count"] = std::to_string(n);
  o.rows.emplace_back("field", amlab::make_field(cfg.p, cfg.k).name());
  o.rows.emplace_back("#M", std::to_string(n));
  return o;
}

Outcome zeta(const RunConfig& cfg) {
  Outcome o;
  const auto curve = amlab::AMCurve::make(cfg.p, cfg.c);
  const std::uint32_t g = (cfg.p - 1) * (cfg.p - 1);
  const std::uint32_t n = std::max(cfg.k, g);
  const auto counts = amlab::count_sequence(curve, n, cfg.budget);
  const auto z = amlab::fit_l_polynomial(counts, cfg.p, g);
  o.passed = z.functional_equation && z.extra_counts_consistent && z.genus_from_zeta == g;
  o.result = amlab::to_json(z);
  std::string cs, ls;
  for (const auto& v : z.counts) cs += (cs.empty() ? "" : " ") + v.str();
  for (const auto& v : z.coefficients) ls += (ls.empty() ? "" : " ") + v.str();
  o.rows.emplace_back("counts", cs);
  o.rows.emplace_back("L coefficients", ls);
  o.rows.emplace_back("genus", std::to_string(z.genus_from_zeta));
  o.rows.emplace_back("p-rank", std::to_string(z.p_rank_from_zeta));
  o.rows.emplace_back("functional equation", yes(z.functional_equation));
  return o;
}

Outcome genus(const RunConfig& cfg) {
  Outcome o;
  if (cfg.cover.empty()) throw amlab::parse_error("genus needs --cover <expr>");
  const amlab::Field f = amlab::make_field(cfg.p, 1);
  const auto rhs = amlab::parse_rational(f, cfg.cover);
  const auto red = amlab::reduce_with_witness(rhs);
  const auto rep = amlab::analyze_cover(amlab::ASCover{red.reduced});
  o.result["cover"] = rhs.to_string();
  o.result["reduced"] = red.reduced.to_string();
  o.result["report"] = amlab::to_json(rep);
  o.rows.emplace_back("cover", "y^p - y = " + rhs.to_string());
  if (red.reduced != rhs) o.rows.emplace_back("reduced", "y^p - y = " + red.reduced.to_string());
  for (const auto& d : rep.ramified)
    o.rows.emplace_back("ramified at " + d.place.to_string(), "jump " + std::to_string(d.jump));
  o.rows.emplace_back("genus", std::to_string(rep.genus->value) + " (" + rep.genus->formula + ")");
  o.rows.emplace_back("p-rank", std::to_string(rep.p_rank->value) + " (" + rep.p_rank->formula + ")");
  return o;
}

void add_checks(Outcome& o, const std::vector<amlab::CheckResult>& checks) {
  o.result["checks"] = Json::array();
  for (const auto& c : checks) {
    o.result["checks"].push_back(amlab::to_json(c));
    if (c.status == amlab::CheckStatus::failed) o.passed = false;
    o.rows.emplace_back(c.name, std::string(amlab::to_string(c.status)) + " [" + c.mode + "]" +
                                    (c.note.empty() ? "" : "  " + c.note));
  }
}

Outcome quotients(const RunConfig& cfg) {
  Outcome o;
  std::vector<amlab::CheckResult> checks{amlab::check_quotient_by_translation(cfg.p, false, cfg.c),
                                         amlab::check_quotient_by_translation(cfg.p, true, cfg.c),
                                         amlab::check_diagonal_quotient(cfg.p, cfg.c, cfg.budget)};
  if (cfg.p <= 7) checks.push_back(amlab::check_fixed_field_translations(cfg.p, cfg.a, cfg.b));
  checks.push_back(amlab::check_fibered_system_and_substitution(cfg.p, cfg.a, cfg.b));
  add_checks(o, checks);
  return o;
}

Outcome verify_theorem(const RunConfig& cfg) {
  Outcome o;
  const auto rep = amlab::run_all(cfg.p, cfg.budget, cfg.seed);
  o.result = amlab::to_json(rep);
  add_checks(o, rep.checks);
  o.passed = rep.passed();
  return o;
}

void print_table(const Rows& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) std::cout << "  " << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void write_outputs(const std::string& cmd, const RunConfig& cfg, const Json& doc, const Rows& rows) {
  if (!cfg.json_path.empty()) {
    if (cfg.json_path == "-") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream out(cfg.json_path);
      if (!out) throw std::runtime_error("cannot write " + cfg.json_path);
      out << doc.dump(2) << "\n";
    }
  }
  if (!cfg.csv_path.empty()) {
    std::ofstream out(cfg.csv_path);
    if (!out) throw std::runtime_error("cannot write " + cfg.csv_path);
    out << "command,key,value\n";
    for (const auto& [k, v] : rows) out << cmd << "," << csv_field(k) << "," << csv_field(v) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Mumford curve toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime")->required();
    sub->add_option("--budget", cfg.budget, "maximum enumeration size")->check(CLI::PositiveNumber);
    sub->add_option("--json", cfg.json_path, "write a JSON report to PATH ('-' for stdout)");
    sub->add_option("--csv", cfg.csv_path, "write key/value rows as CSV to PATH");
  };
  auto* aut = app.add_subcommand("aut-check", "group presentation and invariance of the curve under H");
  common(aut);
  aut->add_option("--c", cfg.c, "curve constant");
  auto* orb = app.add_subcommand("orbits", "orbits of C_p x C_p on points over F_{p^k} (k = 0: branch places)");
  common(orb);
  orb->add_option("--k", cfg.k, "extension degree");
  orb->add_option("--c", cfg.c, "curve constant");
  auto* cnt = app.add_subcommand("count", "#M(F_{p^k}) by the trace criterion");
  common(cnt);
  cnt->add_option("--k", cfg.k, "extension degree")->check(CLI::PositiveNumber);
  cnt->add_option("--c", cfg.c, "curve constant");
  auto* zet = app.add_subcommand("zeta", "L-polynomial of M from point counts");
  common(zet);
  zet->add_option("--k", cfg.k, "number of counts (at least the genus)");
  zet->add_option("--c", cfg.c, "curve constant");
  auto* gen = app.add_subcommand("genus", "genus and p-rank of y^p - y = f(x)");
  common(gen);
  gen->add_option("--cover", cfg.cover, "right-hand side f(x), e.g. \"2x + 1/x\"")->required();
  auto* quo = app.add_subcommand("quotients", "quotient and fibered-model checks");
  common(quo);
  quo->add_option("--c", cfg.c, "curve constant");
  quo->add_option("--a", cfg.a, "fibered model parameter a");
  quo->add_option("--b", cfg.b, "fibered model parameter b");
  auto* thm = app.add_subcommand("verify-theorem", "every check for one p");
  common(thm);
  thm->add_option("--seed", cfg.seed, "seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const Json params = params_json(cmd, cfg);
  try {
    Outcome o;
    if (cmd == "aut-check") o = aut_check(cfg);
    else if (cmd == "orbits") o = orbits(cfg);
    else if (cmd == "count") o = count(cfg);
    else if (cmd == "zeta") o = zeta(cfg);
    else if (cmd == "genus") o = genus(cfg);
    else if (cmd == "quotients") o = quotients(cfg);
    else o = verify_theorem(cfg);

    std::cout << cmd << " p=" << cfg.p << "\n";
    print_table(o.rows);
    std::cout << (o.passed ? "PASS" : "FAIL") << "\n";
    write_outputs(cmd, cfg, amlab::envelope(cmd, params, o.result, o.passed), o.rows);
    return o.passed ? 0 : 1;
  } catch (const amlab::budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    Json partial{{"error", "budget_exceeded"}, {"message", e.what()}, {"needed", e.needed()}, {"budget", e.budget()}};
    write_outputs(cmd, cfg, amlab::envelope(cmd, params, partial, false), {{"error", e.what()}});
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
