#ifndef AMLAB_POLY1_HPP
#define AMLAB_POLY1_HPP

// Dense univariate polynomials over a Field, with gcd and factorization into
// monic irreducibles (square-free split, distinct-degree, Cantor-Zassenhaus).

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "amlab/error.hpp"
#include "amlab/gf.hpp"

namespace amlab {

class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(Field f) : field_(f) {}
  Poly1(Field f, std::vector<FieldElement> c) : field_(f), c_(std::move(c)) {
    for (const auto& e : c_)
      if (e.field() != field_) throw field_mismatch("coefficient from a different field");
    trim();
  }

  static Poly1 constant(const FieldElement& c) { return Poly1(c.field(), {c}); }
  static Poly1 x(Field f) { return Poly1(f, {f.zero(), f.one()}); }
  static Poly1 monomial(const FieldElement& c, std::size_t n) {
    std::vector<FieldElement> v(n + 1, c.field().zero());
    v[n] = c;
    return Poly1(c.field(), std::move(v));
  }
  /// Coefficients given as integers, constant term first.
  static Poly1 from_ints(Field f, const std::vector<std::int64_t>& c) {
    std::vector<FieldElement> v;
    v.reserve(c.size());
    for (auto n : c) v.push_back(f.from_int(n));
    return Poly1(f, std::move(v));
  }

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  FieldElement leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly1 monic() const {
    if (c_.empty()) return *this;
    return *this * leading().inverse();
  }

  /// Horner evaluation; `x` may live in an extension of a prime coefficient field.
  FieldElement operator()(const FieldElement& x) const {
    const Field target = x.field();
    FieldElement r = target.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + target.embed(c_[i]);
    return r;
  }

  Poly1 derivative() const {
    std::vector<FieldElement> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.p())));
    return Poly1(field_, std::move(d));
  }

  Poly1 pow(std::uint64_t e) const {
    Poly1 r = constant(field_.one());
    Poly1 b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  Poly1 operator-() const {
    Poly1 r = *this;
    for (auto& e : r.c_) e = -e;
    return r;
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    a.check(b);
    std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly1(a.field_, std::move(r));
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return Poly1(a.field_);
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly1(a.field_, std::move(r));
  }
  friend Poly1 operator*(const Poly1& a, const FieldElement& s) {
    std::vector<FieldElement> r = a.c_;
    for (auto& e : r) e *= s;
    return Poly1(a.field_, std::move(r));
  }
  friend Poly1 operator*(const FieldElement& s, const Poly1& a) { return a * s; }

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  /// Canonical order: degree, then coefficients from the constant term up.
  friend bool operator<(const Poly1& a, const Poly1& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i].index() < b.c_[i].index();
    return false;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check(const Poly1& o) const {
    if (field_ != o.field_) throw field_mismatch("polynomials over different fields");
  }

  Field field_;
  std::vector<FieldElement> c_;
};

inline std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  const Field f = a.field();
  if (a.degree() < b.degree()) return {Poly1(f), a};
  std::vector<FieldElement> r = a.coeffs();
  std::vector<FieldElement> q(a.degree() - b.degree() + 1, f.zero());
  const FieldElement inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const FieldElement t = r[i] * inv;
    if (t.is_zero()) continue;
    const int shift = i - b.degree();
    q[shift] = t;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= t * bc[j];
  }
  return {Poly1(f, std::move(q)), Poly1(f, std::move(r))};
}

inline Poly1 operator/(const Poly1& a, const Poly1& b) { return divmod(a, b).first; }
inline Poly1 operator%(const Poly1& a, const Poly1& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly1 gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Poly1, Poly1, Poly1> xgcd(const Poly1& a, const Poly1& b) {
  const Field f = a.field();
  Poly1 r0 = a, r1 = b;
  Poly1 s0 = Poly1::constant(f.one()), s1(f);
  Poly1 t0(f), t1 = Poly1::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

inline Poly1 powmod(Poly1 base, std::uint64_t e, const Poly1& m) {
  Poly1 r = Poly1::constant(m.field().one()) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return r;
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline Poly1 invmod(const Poly1& a, const Poly1& m) {
  auto [g, s, t] = xgcd(a % m, m);
  if (!g.is_one()) throw domain_error("polynomial not invertible modulo m");
  return s % m;
}

/// Multiplicity of the irreducible `pi` in f (f nonzero).
inline unsigned multiplicity(Poly1 f, const Poly1& pi) {
  if (f.is_zero()) throw domain_error("multiplicity in the zero polynomial");
  unsigned n = 0;
  for (;;) {
    auto [q, r] = divmod(f, pi);
    if (!r.is_zero()) return n;
    f = std::move(q);
    ++n;
  }
}

namespace detail {

// c^(1/p) coefficientwise, for f whose exponents are all multiples of p.
inline Poly1 pth_root(const Poly1& f) {
  const Field fld = f.field();
  const std::uint32_t p = fld.p();
  const std::uint64_t root_exp = fld.order() / p;  // Frobenius inverse on F_q
  std::vector<FieldElement> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r.push_back(f.coeff(i).pow(root_exp));
  return Poly1(fld, std::move(r));
}

inline std::vector<std::pair<Poly1, unsigned>> squarefree(const Poly1& f) {
  std::vector<std::pair<Poly1, unsigned>> out;
  const Poly1 one = Poly1::constant(f.field().one());
  Poly1 c = gcd(f, f.derivative());
  Poly1 w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly1 y = gcd(w, c);
    Poly1 fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    for (auto& [g, j] : squarefree(pth_root(c).monic())) out.emplace_back(g, j * f.field().p());
  }
  return out;
}

inline std::vector<std::pair<Poly1, unsigned>> distinct_degree(Poly1 f) {
  std::vector<std::pair<Poly1, unsigned>> out;
  const Field fld = f.field();
  const Poly1 x = Poly1::x(fld);
  Poly1 h = x % f;
  unsigned i = 1;
  while (f.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(h, fld.order(), f);
    Poly1 g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

inline void equal_degree(const Poly1& f, unsigned d, std::mt19937_64& rng, std::vector<Poly1>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const Field fld = f.field();
  const std::uint64_t q = fld.order();
  for (;;) {
    std::vector<FieldElement> a;
    for (int i = 0; i < f.degree(); ++i) a.push_back(fld.element(rng() % q));
    Poly1 ap(fld, std::move(a));
    if (ap.is_constant()) continue;
    Poly1 g = gcd(ap, f);
    if (g.is_one()) {
      // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
      Poly1 t = ap % f;
      Poly1 conj = t;
      for (unsigned j = 1; j < d; ++j) {
        conj = powmod(conj, q, f);
        t = (t * conj) % f;
      }
      t = powmod(t, (q - 1) / 2, f);
      g = gcd(t - Poly1::constant(fld.one()), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Monic irreducible factors with multiplicities, in canonical order.
/// The leading coefficient of f is dropped.
inline std::vector<std::pair<Poly1, unsigned>> factor(const Poly1& f) {
  if (f.is_zero()) throw domain_error("factor of the zero polynomial");
  std::vector<std::pair<Poly1, unsigned>> out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(0x5eed);
  for (auto& [sq, mult] : detail::squarefree(f.monic())) {
    for (auto& [block, d] : detail::distinct_degree(sq)) {
      std::vector<Poly1> irr;
      detail::equal_degree(block, d, rng, irr);
      for (auto& g : irr) out.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge repeated factors that arrive from different square-free layers.
  std::vector<std::pair<Poly1, unsigned>> merged;
  for (auto& fm : out) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(std::move(fm));
  }
  return merged;
}

inline bool is_irreducible(const Poly1& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

inline std::string Poly1::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (i == 0 || !unit) os << c_[i].to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace amlab

#endif  // AMLAB_POLY1_HPP
