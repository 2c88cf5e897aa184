#ifndef AMLAB_ASCOVER_HPP
#define AMLAB_ASCOVER_HPP

// Artin-Schreier covers y^p - y = f(x) of the projective line: reduction to
// standard form, ramification filtrations, and genus / p-rank bookkeeping
// through the Riemann-Hurwitz and Deuring-Shafarevich formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amlab/error.hpp"
#include "amlab/gf.hpp"
#include "amlab/poly1.hpp"
#include "amlab/rational.hpp"

namespace amlab {

struct ASCover {
  RationalFunction rhs;  // y^p - y = rhs

  Field field() const { return rhs.field(); }
  std::uint32_t p() const { return rhs.field().p(); }
};

/// f' = f - (u^p - u).
struct Reduction {
  RationalFunction reduced;
  RationalFunction u;
};

namespace detail {

// Leading coefficient of f at a pole of order m at P, together with the
// element u whose Artin-Schreier image cancels it when p | m.
inline RationalFunction cancelling_term(const RationalFunction& f, const Place& P, int m) {
  const Field fld = f.field();
  const std::uint32_t p = fld.p();
  const int e = m / static_cast<int>(p);
  if (P.is_infinite()) {
    const FieldElement c = f.numerator().leading();  // denominator is monic
    const FieldElement r = c.pow(fld.order() / p);   // p-th root in F_q
    return RationalFunction(Poly1::monomial(r, static_cast<std::size_t>(e)));
  }
  const Poly1& pi = P.minimal_polynomial();
  // f = N / (pi^m R); the residue class of N / R mod pi is the leading coefficient.
  Poly1 R = f.denominator();
  for (int i = 0; i < m; ++i) R = R / pi;
  const Poly1 c = (f.numerator() * invmod(R, pi)) % pi;
  std::uint64_t residue_order = 1;
  for (int i = 0; i < pi.degree(); ++i) residue_order *= fld.order();
  const Poly1 r = powmod(c, residue_order / p, pi);
  return RationalFunction(r, pi.pow(static_cast<std::uint64_t>(e)));
}

}  // namespace detail

/// Repeatedly cancels the leading term at every pole whose order is divisible
/// by p. Throws domain_error("reducible cover") when f = u^p - u + c with c in
/// the Artin-Schreier image of the constants, and domain_error for a constant
/// field extension (f reduces to a constant of nonzero trace).
inline Reduction reduce_with_witness(const RationalFunction& f) {
  if (f.is_zero()) throw domain_error("reducible cover");
  const Field fld = f.field();
  const std::uint32_t p = fld.p();
  RationalFunction g = f;
  RationalFunction total{Poly1(fld)};
  for (bool changed = true; changed;) {
    changed = false;
    if (g.is_constant()) break;
    for (const auto& [P, m] : pole_divisor(g)) {
      if (m % static_cast<int>(p) != 0) continue;
      const RationalFunction u = detail::cancelling_term(g, P, m);
      g = g - (u.pow(p) - u);
      total = total + u;
      changed = true;
      break;
    }
  }
  if (g.is_constant()) {
    const FieldElement c = g.is_zero() ? fld.zero() : g.numerator().leading();
    if (trace(c).is_zero()) throw domain_error("reducible cover");
    throw domain_error("constant field extension, not a geometric cover");
  }
  return {g, total};
}

inline RationalFunction reduce_standard_form(const RationalFunction& f) { return reduce_with_witness(f).reduced; }

/// True iff f = u^p - u + c for some rational u and a constant c of trace 0.
inline bool in_artin_schreier_image(const RationalFunction& f) {
  try {
    reduce_with_witness(f);
    return false;
  } catch (const domain_error& e) {
    return std::string(e.what()) == "reducible cover";
  }
}

inline bool is_reduced(const RationalFunction& f) {
  if (f.is_constant()) return false;
  for (const auto& [P, m] : pole_divisor(f))
    if (m % static_cast<int>(f.field().p()) == 0) return false;
  return true;
}

struct RamificationDatum {
  Place place = Place::infinite(make_field(3, 1));
  std::uint32_t jump = 0;                        // 0 when unramified
  std::vector<std::uint64_t> filtration_orders;  // |S_P^(i)| for i = 0, 1, ... until 1

  bool ramified() const { return jump > 0; }
};

/// Lower-numbering filtration at the place over P: order p for i = 0..m, then
/// 1, where m is the (reduced) pole order of the right-hand side at P.
inline RamificationDatum ramification_filtration(const ASCover& cover, const Place& P) {
  if (!is_reduced(cover.rhs)) throw domain_error("cover not reduced");
  RamificationDatum d;
  d.place = P;
  const int v = valuation(cover.rhs, P);
  if (v >= 0) {
    d.filtration_orders = {1};
    return d;
  }
  d.jump = static_cast<std::uint32_t>(-v);
  d.filtration_orders.assign(d.jump + 1, cover.p());
  d.filtration_orders.push_back(1);
  return d;
}

struct TaggedInt {
  std::int64_t value = 0;
  std::string formula;  // "rh", "ds", "plucker", "given"
};

struct HurwitzBound {
  std::int64_t lhs = 0;   // 2g - 2
  std::int64_t rhs = 0;   // |S|(2g' - 2) + sum (|S| - l_i)
  bool equality = false;
  bool tame = false;      // gcd(|S_P|, p) = 1 everywhere
};

struct CoverReport {
  std::uint32_t p = 0;
  std::uint64_t degree = 0;
  std::optional<TaggedInt> genus, base_genus, p_rank, base_p_rank;
  std::vector<RamificationDatum> ramified;
  std::int64_t different_degree = 0;
  std::optional<HurwitzBound> bound;
};

namespace detail {

inline std::vector<RamificationDatum> ramification_data(const ASCover& cover) {
  std::vector<RamificationDatum> out;
  for (const auto& [P, m] : pole_divisor(cover.rhs)) out.push_back(ramification_filtration(cover, P));
  return out;
}

inline std::int64_t ramified_points(const std::vector<RamificationDatum>& data) {
  std::int64_t n = 0;
  for (const auto& d : data) n += d.place.degree();
  return n;
}

}  // namespace detail

/// Genus of a reduced cover of the projective line:
/// 2g - 2 = p(0 - 2) + sum_P deg(P) sum_i (|S_P^(i)| - 1).
inline CoverReport riemann_hurwitz(const ASCover& cover) {
  if (!is_reduced(cover.rhs)) throw domain_error("cover not reduced");
  const std::int64_t p = cover.p();
  CoverReport rep;
  rep.p = cover.p();
  rep.degree = cover.p();
  rep.base_genus = TaggedInt{0, "given"};
  rep.ramified = detail::ramification_data(cover);
  for (const auto& d : rep.ramified) {
    std::int64_t local = 0;
    for (auto o : d.filtration_orders) local += static_cast<std::int64_t>(o) - 1;
    rep.different_degree += static_cast<std::int64_t>(d.place.degree()) * local;
  }
  const std::int64_t two_g_minus_2 = p * (2 * 0 - 2) + rep.different_degree;
  if ((two_g_minus_2 + 2) % 2 != 0) throw invariant_violation("odd Riemann-Hurwitz total");
  rep.genus = TaggedInt{(two_g_minus_2 + 2) / 2, "rh"};

  HurwitzBound b;
  b.lhs = two_g_minus_2;
  b.rhs = p * (2 * 0 - 2) + detail::ramified_points(rep.ramified) * (p - 1);
  b.equality = b.lhs == b.rhs;
  b.tame = rep.ramified.empty();
  rep.bound = b;
  return rep;
}

struct AbstractCoverData {
  std::uint32_t p = 0;
  std::uint64_t group_order = 0;  // |S|, a power of p
  std::int64_t base_genus = 0;
  std::int64_t base_p_rank = 0;
  std::vector<std::uint64_t> short_orbit_sizes;
};

/// gamma - 1 = |S|(gamma' - 1) + sum (|S| - l_i) for a p-group S.
inline CoverReport deuring_shafarevich(const AbstractCoverData& data) {
  if (data.p < 3 || !detail::is_prime(data.p)) throw domain_error("p must be an odd prime");
  std::uint64_t n = data.group_order;
  if (n == 0) throw domain_error("empty group");
  while (n % data.p == 0) n /= data.p;
  if (n != 1) throw domain_error("Deuring-Shafarevich needs a p-group");
  const auto S = static_cast<std::int64_t>(data.group_order);
  std::int64_t sum = 0;
  for (auto l : data.short_orbit_sizes) {
    if (l == 0 || data.group_order % l != 0 || l >= data.group_order)
      throw domain_error("short orbit sizes must be proper divisors of |S|");
    sum += S - static_cast<std::int64_t>(l);
  }
  CoverReport rep;
  rep.p = data.p;
  rep.degree = data.group_order;
  rep.base_genus = TaggedInt{data.base_genus, "given"};
  rep.base_p_rank = TaggedInt{data.base_p_rank, "given"};
  rep.p_rank = TaggedInt{1 + S * (data.base_p_rank - 1) + sum, "ds"};
  return rep;
}

/// p-rank of a reduced cover of the projective line: every pole is totally
/// ramified, each geometric point giving a short orbit of size 1.
inline CoverReport deuring_shafarevich(const ASCover& cover) {
  if (!is_reduced(cover.rhs)) throw domain_error("cover not reduced");
  AbstractCoverData data;
  data.p = cover.p();
  data.group_order = cover.p();
  data.base_genus = 0;
  data.base_p_rank = 0;
  const auto ram = detail::ramification_data(cover);
  for (const auto& d : ram)
    for (unsigned i = 0; i < d.place.degree(); ++i) data.short_orbit_sizes.push_back(1);
  CoverReport rep = deuring_shafarevich(data);
  rep.ramified = ram;
  return rep;
}

/// Genus (Riemann-Hurwitz) and p-rank (Deuring-Shafarevich) of a reduced cover.
inline CoverReport analyze_cover(const ASCover& cover) {
  CoverReport rep = riemann_hurwitz(cover);
  rep.p_rank = deuring_shafarevich(cover).p_rank;
  rep.base_p_rank = TaggedInt{0, "given"};
  if (rep.p_rank->value < 0 || rep.p_rank->value > rep.genus->value)
    throw invariant_violation("p-rank outside [0, g]");
  return rep;
}

/// Genus of (x^p - x)(y^p - y) = c from its plane model (degree 2p, two
/// ordinary p-fold points) and its p-rank from Deuring-Shafarevich applied to
/// the translation group C_p x C_p with two short orbits of size p.
inline CoverReport composite_report(std::uint32_t p) {
  if (p < 3 || !detail::is_prime(p)) throw domain_error("p must be an odd prime");
  const std::int64_t P = p;
  const std::int64_t d = 2 * P;
  const std::int64_t g = (d - 1) * (d - 2) / 2 - 2 * (P * (P - 1) / 2);
  CoverReport rep = deuring_shafarevich(AbstractCoverData{p, std::uint64_t(P * P), 0, 0, {p, p}});
  rep.genus = TaggedInt{g, "plucker"};
  if (g != (P - 1) * (P - 1) || rep.p_rank->value != g)
    throw invariant_violation("composite genus / p-rank differ from (p-1)^2");
  return rep;
}

}  // namespace amlab

#endif  // AMLAB_ASCOVER_HPP
