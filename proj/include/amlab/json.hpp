#ifndef AMLAB_JSON_HPP
#define AMLAB_JSON_HPP

// JSON forms of the report types. Keys keep insertion order so identical
// inputs give byte-identical output. Big integers are decimal strings.

#include <string>

#include <json.hpp>

#include "amlab/ascover.hpp"
#include "amlab/curve.hpp"
#include "amlab/gf.hpp"
#include "amlab/grp.hpp"
#include "amlab/pipeline.hpp"
#include "amlab/zeta.hpp"

namespace amlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "amlab/1";

inline Json to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["k"] = f.k();
  j["modulus"] = f.modulus();
  return j;
}

inline Json to_json(const GroupElement& g) {
  Json j;
  j["a"] = g.a;
  j["b"] = g.b;
  j["i"] = g.i;
  j["s"] = g.s;
  return j;
}

inline Json to_json(const CurvePoint& P) {
  Json j;
  if (P.is_branch()) {
    j["kind"] = "branch";
    j["center"] = P.center == Center::O1 ? "O1" : "O2";
    j["tangent"] = P.tangent;
  } else {
    j["kind"] = "affine";
    j["x"] = P.x.to_string();
    j["y"] = P.y.to_string();
  }
  return j;
}

inline Json to_json(const OrbitReport& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["k"] = r.k;
  j["points_enumerated"] = r.points_enumerated;
  j["orbit_sizes"] = r.orbit_sizes;
  j["short_orbits"] = Json::array();
  for (const auto& o : r.short_orbits) {
    Json e;
    e["size"] = o.points.size();
    e["points"] = Json::array();
    for (const auto& P : o.points) e["points"].push_back(P.to_string());
    e["stabilizer"] = Json::array();
    for (const auto& g : o.stabilizer) e["stabilizer"].push_back(to_json(g));
    e["common_stabilizer"] = o.common_stabilizer;
    j["short_orbits"].push_back(e);
  }
  j["orbit_stabilizer_holds"] = r.orbit_stabilizer_holds;
  return j;
}

inline Json to_json(const PresentationReport& r) {
  Json j;
  j["p"] = r.p;
  j["group_order"] = r.group_order;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(Json{{"identity", c.identity}, {"holds", c.status}});
  j["passed"] = r.passed();
  return j;
}

inline Json to_json(const TaggedInt& t) { return Json{{"value", t.value}, {"formula", t.formula}}; }

inline Json to_json(const CoverReport& r) {
  Json j;
  j["p"] = r.p;
  j["degree"] = r.degree;
  auto put = [&](const char* key, const std::optional<TaggedInt>& v) { j[key] = v ? to_json(*v) : Json(nullptr); };
  put("genus", r.genus);
  put("base_genus", r.base_genus);
  put("p_rank", r.p_rank);
  put("base_p_rank", r.base_p_rank);
  j["ramified"] = Json::array();
  for (const auto& d : r.ramified)
    j["ramified"].push_back(Json{{"place", d.place.to_string()},
                                 {"degree", d.place.degree()},
                                 {"jump", d.jump},
                                 {"filtration_orders", d.filtration_orders}});
  j["different_degree"] = r.different_degree;
  if (r.bound)
    j["hurwitz_bound"] = Json{{"lhs", r.bound->lhs},
                              {"rhs", r.bound->rhs},
                              {"equality", r.bound->equality},
                              {"tame", r.bound->tame}};
  return j;
}

inline Json to_json(const ZetaReport& z) {
  Json j;
  j["p"] = z.p;
  j["genus"] = z.genus;
  j["counts"] = Json::array();
  for (const auto& n : z.counts) j["counts"].push_back(n.str());
  j["L_coefficients"] = Json::array();
  for (const auto& b : z.coefficients) j["L_coefficients"].push_back(b.str());
  j["genus_from_zeta"] = z.genus_from_zeta;
  j["p_rank_from_zeta"] = z.p_rank_from_zeta;
  j["functional_equation"] = z.functional_equation;
  j["extra_counts_consistent"] = z.extra_counts_consistent;
  return j;
}

inline Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["mode"] = c.mode;
  j["anchor"] = c.anchor;
  Json objects = Json::object();
  for (const auto& [k, v] : c.objects) objects[k] = v;
  j["objects"] = objects;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json to_json(const TheoremReport& r) {
  Json j;
  j["p"] = r.p;
  j["scope"] = r.scope;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["passed"] = r.passed();
  return j;
}

/// Top-level document written by the CLI.
inline Json envelope(const std::string& command, Json params, Json result, bool passed) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["params"] = std::move(params);
  j["passed"] = passed;
  j["result"] = std::move(result);
  return j;
}

}  // namespace amlab

#endif  // AMLAB_JSON_HPP
