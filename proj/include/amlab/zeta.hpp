#ifndef AMLAB_ZETA_HPP
#define AMLAB_ZETA_HPP

// Point counts over F_{p^k} and exact L-polynomial reconstruction.
//
// With s_k = q^k + 1 - N_k the power sums of the reciprocal roots, Newton's
// identities give the elementary symmetric functions e_j, and
// L(t) = sum_j (-1)^j e_j t^j. Only N_1..N_g are needed; the rest of L comes
// from b_{2g-i} = q^{g-i} b_i.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "amlab/ascover.hpp"
#include "amlab/curve.hpp"
#include "amlab/error.hpp"
#include "amlab/gf.hpp"
#include "amlab/rational.hpp"

namespace amlab {

using BigInt = boost::multiprecision::cpp_int;

/// #M(F_{p^k}) via the trace criterion: y^p - y = t has p roots in F_{p^k}
/// when Tr(t) = 0 and none otherwise. The 2p branch places are F_p-rational.
inline std::uint64_t count_points(const AMCurve& curve, std::uint32_t k, std::uint64_t budget = kDefaultBudget) {
  const Field f = make_field(curve.p(), k);
  const std::uint64_t q = f.order();
  if (q > budget) throw budget_exceeded("trace-criterion count", q, budget);
  const FieldElement c = f.embed(curve.c);
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElement x = f.element(i);
    const FieldElement eta = x.frobenius() - x;
    if (eta.is_zero()) continue;
    if (trace(c / eta).is_zero()) n += curve.p();
  }
  return n + 2ull * curve.p();
}

/// Same count by scanning all q^2 pairs.
inline std::uint64_t count_points_naive(const AMCurve& curve, std::uint32_t k, std::uint64_t budget = kDefaultBudget) {
  const Field f = make_field(curve.p(), k);
  const std::uint64_t q = f.order();
  if (q > (1ull << 31) || q * q > budget) throw budget_exceeded("naive pair count", q > (1ull << 31) ? ~0ull : q * q, budget);
  std::vector<FieldElement> eta;
  eta.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElement x = f.element(i);
    eta.push_back(x.frobenius() - x);
  }
  const FieldElement c = f.embed(curve.c);
  std::uint64_t n = 0;
  for (const auto& u : eta)
    for (const auto& v : eta)
      if (u * v == c) ++n;
  return n + 2ull * curve.p();
}

/// Rational places over F_{p^k} of the smooth model of y^p - y = f(x), f over F_p.
/// Poles of the reduced f are totally ramified; a pole of degree d yields d
/// rational places when d | k.
inline std::uint64_t count_points(const ASCover& cover, std::uint32_t k, std::uint64_t budget = kDefaultBudget) {
  if (!cover.field().is_prime_field()) throw domain_error("counting needs a cover over the prime field");
  const RationalFunction f = reduce_standard_form(cover.rhs);
  const std::uint32_t p = cover.p();
  const Field F = make_field(p, k);
  if (F.order() > budget) throw budget_exceeded("cover point count", F.order(), budget);
  std::uint64_t n = 0;
  bool pole_at_infinity = false;
  for (const auto& [P, m] : pole_divisor(f)) {
    if (P.is_infinite())
      pole_at_infinity = true;
    else if (k % P.degree() == 0)
      n += P.degree();
  }
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const auto v = f(F.element(i));
    if (v && trace(*v).is_zero()) n += p;
  }
  if (pole_at_infinity) {
    n += 1;
  } else {
    const FieldElement at_inf = f.numerator().degree() == f.denominator().degree()
                                    ? f.numerator().leading() / f.denominator().leading()
                                    : cover.field().zero();
    if (trace(F.embed(at_inf)).is_zero()) n += p;
  }
  return n;
}

struct ZetaReport {
  std::uint32_t p = 0;
  std::uint32_t genus = 0;
  std::vector<BigInt> counts;        // N_1, N_2, ...
  std::vector<BigInt> coefficients;  // b_0 .. b_{2g}
  std::uint32_t genus_from_zeta = 0;
  std::uint32_t p_rank_from_zeta = 0;
  bool functional_equation = false;
  bool extra_counts_consistent = true;  // counts beyond N_g agree with L
};

namespace detail {

inline BigInt big_pow(std::uint64_t base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Power sums s_1..s_n of the roots of prod (1 - a_i t) from e_0..e_m (e_j = 0 beyond m).
inline std::vector<BigInt> power_sums(const std::vector<BigInt>& e, std::size_t n) {
  std::vector<BigInt> s(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i < k; ++i) {
      if (i >= e.size()) break;
      acc += (i % 2 == 1 ? 1 : -1) * e[i] * s[k - i];
    }
    if (k < e.size()) acc += (k % 2 == 1 ? 1 : -1) * BigInt(k) * e[k];
    s[k] = acc;
  }
  return s;
}

}  // namespace detail

/// Exact L-polynomial of a genus-g curve over F_p from N_1..N_g (and
/// optionally more counts, which are then checked against L).
inline ZetaReport fit_l_polynomial(const std::vector<BigInt>& counts, std::uint32_t p, std::uint32_t g) {
  if (p < 3 || !detail::is_prime(p)) throw domain_error("p must be an odd prime");
  if (counts.size() < g) throw domain_error("need at least g point counts");
  ZetaReport rep;
  rep.p = p;
  rep.genus = g;
  rep.counts = counts;

  std::vector<BigInt> s(counts.size() + 1, 0);
  for (std::size_t k = 1; k <= counts.size(); ++k) {
    const BigInt qk = detail::big_pow(p, static_cast<unsigned>(k));
    s[k] = qk + 1 - counts[k - 1];
    // (N - q^k - 1)^2 <= 4 g^2 q^k
    if (s[k] * s[k] > 4 * BigInt(g) * g * qk)
      throw domain_error("N_" + std::to_string(k) + " violates the Hasse-Weil bound");
  }

  // j e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} s_i
  std::vector<BigInt> e(2 * g + 1, 0);
  e[0] = 1;
  for (std::uint32_t j = 1; j <= g; ++j) {
    BigInt acc = 0;
    for (std::uint32_t i = 1; i <= j; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[j - i] * s[i];
    if (acc % j != 0) throw domain_error("Newton identity division is not exact; counts are inconsistent");
    e[j] = acc / j;
  }
  std::vector<BigInt>& b = rep.coefficients;
  b.assign(2 * g + 1, 0);
  for (std::uint32_t j = 0; j <= g; ++j) b[j] = (j % 2 == 0 ? 1 : -1) * e[j];
  for (std::uint32_t i = 0; i < g; ++i) b[2 * g - i] = detail::big_pow(p, g - i) * b[i];

  rep.functional_equation = b[0] == 1;
  for (std::uint32_t i = 0; i <= g; ++i)
    if (b[2 * g - i] != detail::big_pow(p, g - i) * b[i]) rep.functional_equation = false;

  if (counts.size() > g) {
    for (std::uint32_t j = 0; j <= 2 * g; ++j) e[j] = (j % 2 == 0 ? 1 : -1) * b[j];
    const auto predicted = detail::power_sums(e, counts.size());
    for (std::size_t k = 1; k <= counts.size(); ++k)
      if (predicted[k] != s[k]) rep.extra_counts_consistent = false;
  }

  for (std::uint32_t j = 0; j <= 2 * g; ++j)
    if (b[j] != 0) rep.genus_from_zeta = j / 2;
  rep.p_rank_from_zeta = 0;
  for (std::uint32_t j = 0; j <= 2 * g; ++j) {
    BigInt r = b[j] % p;
    if (r != 0) rep.p_rank_from_zeta = j;
  }
  return rep;
}

/// Counts N_1..N_n of the Artin-Mumford curve by the trace criterion.
inline std::vector<BigInt> count_sequence(const AMCurve& curve, std::uint32_t n, std::uint64_t budget = kDefaultBudget) {
  std::vector<BigInt> out;
  for (std::uint32_t k = 1; k <= n; ++k) out.emplace_back(count_points(curve, k, budget));
  return out;
}

}  // namespace amlab

#endif  // AMLAB_ZETA_HPP
