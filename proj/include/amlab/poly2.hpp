#ifndef AMLAB_POLY2_HPP
#define AMLAB_POLY2_HPP

// Sparse bivariate polynomials u^i v^j over a Field, with substitution,
// division by a single polynomial in lex order (u > v), and resultants of
// polynomials whose coefficients are themselves bivariate.

#include <array>
#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "amlab/error.hpp"
#include "amlab/gf.hpp"
#include "amlab/poly1.hpp"

namespace amlab {

class Poly2 {
 public:
  using Exponent = std::pair<std::uint32_t, std::uint32_t>;
  using Terms = std::map<Exponent, FieldElement>;

  Poly2() = default;
  explicit Poly2(Field f, std::string u = "x", std::string v = "y") : field_(f), vars_{std::move(u), std::move(v)} {}

  static Poly2 constant(const FieldElement& c, std::string u = "x", std::string v = "y") {
    Poly2 r(c.field(), std::move(u), std::move(v));
    r.add_term({0, 0}, c);
    return r;
  }
  /// The variable with index `which` (0 = u, 1 = v).
  static Poly2 variable(Field f, int which, std::string u = "x", std::string v = "y") {
    Poly2 r(f, std::move(u), std::move(v));
    r.add_term(which == 0 ? Exponent{1, 0} : Exponent{0, 1}, f.one());
    return r;
  }
  static Poly2 monomial(const FieldElement& c, std::uint32_t i, std::uint32_t j, std::string u = "x",
                        std::string v = "y") {
    Poly2 r(c.field(), std::move(u), std::move(v));
    r.add_term({i, j}, c);
    return r;
  }
  /// Lift a univariate polynomial into variable `which`.
  static Poly2 from_poly1(const Poly1& f, int which, std::string u = "x", std::string v = "y") {
    Poly2 r(f.field(), std::move(u), std::move(v));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      const auto e = static_cast<std::uint32_t>(i);
      r.add_term(which == 0 ? Exponent{e, 0} : Exponent{0, e}, f.coeffs()[i]);
    }
    return r;
  }

  Field field() const { return field_; }
  const std::array<std::string, 2>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Poly2 with_vars(std::string u, std::string v) const {
    Poly2 r = *this;
    r.vars_ = {std::move(u), std::move(v)};
    return r;
  }

  FieldElement coeff(std::uint32_t i, std::uint32_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(Exponent e, const FieldElement& c) {
    if (c.field() != field_) throw field_mismatch("term coefficient from a different field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int degree(int which) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, which == 0 ? e.first : e.second);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e.first + e.second);
    return d;
  }

  /// Lex-leading term with u > v.
  std::pair<Exponent, FieldElement> leading_term() const {
    if (terms_.empty()) throw domain_error("leading term of zero");
    return *terms_.rbegin();
  }

  /// Coefficients by power of variable `which`, each a polynomial in the other
  /// variable (returned as Poly2 with the same variable names).
  std::vector<Poly2> coefficients_in(int which) const {
    std::vector<Poly2> out(std::max(0, degree(which) + 1), Poly2(field_, vars_[0], vars_[1]));
    for (const auto& [e, c] : terms_) {
      if (which == 0)
        out[e.first].add_term({0, e.second}, c);
      else
        out[e.second].add_term({e.first, 0}, c);
    }
    return out;
  }

  /// Map every coefficient into `target` (an extension of this field's prime field).
  Poly2 over(Field target) const {
    Poly2 r(target, vars_[0], vars_[1]);
    for (const auto& [e, c] : terms_) r.add_term(e, target.embed(c));
    return r;
  }

  FieldElement operator()(const FieldElement& u, const FieldElement& v) const {
    if (u.field() != v.field()) throw field_mismatch("evaluation point coordinates in different fields");
    const Field t = u.field();
    FieldElement s = t.zero();
    for (const auto& [e, c] : terms_) s += t.embed(c) * u.pow(e.first) * v.pow(e.second);
    return s;
  }

  Poly2 operator-() const {
    Poly2 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    a.check(b);
    Poly2 r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    a.check(b);
    Poly2 r(a.field_, a.vars_[0], a.vars_[1]);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  friend Poly2 operator*(const Poly2& a, const FieldElement& s) {
    Poly2 r(a.field_, a.vars_[0], a.vars_[1]);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
    return r;
  }
  friend Poly2 operator*(const FieldElement& s, const Poly2& a) { return a * s; }
  friend Poly2 operator+(const Poly2& a, const FieldElement& s) { return a + constant(s, a.vars_[0], a.vars_[1]); }
  friend Poly2 operator-(const Poly2& a, const FieldElement& s) { return a + (-s); }

  Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
  Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  Poly2 pow(std::uint64_t e) const {
    Poly2 r = constant(field_.one(), vars_[0], vars_[1]);
    Poly2 b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  /// Equality of fields and terms; variable names are labels only.
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  /// Terms `c*u^i*v^j` joined by " + ", highest lex term first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto [i, j] = it->first;
      if (!first) os << " + ";
      first = false;
      bool need_star = false;
      if (!it->second.is_one() || (i == 0 && j == 0)) {
        os << it->second.to_string();
        need_star = true;
      }
      auto emit = [&](const std::string& var, std::uint32_t n) {
        if (n == 0) return;
        if (need_star) os << "*";
        os << var;
        if (n > 1) os << "^" << n;
        need_star = true;
      };
      emit(vars_[0], i);
      emit(vars_[1], j);
    }
    return os.str();
  }

 private:
  void check(const Poly2& o) const {
    if (field_ != o.field_) throw field_mismatch("bivariate polynomials over different fields");
  }

  Field field_;
  std::array<std::string, 2> vars_{"x", "y"};
  Terms terms_;
};

/// f(gx, gy), fully expanded. The result uses gx's variable names.
inline Poly2 substitute2(const Poly2& f, const Poly2& gx, const Poly2& gy) {
  if (f.field() != gx.field() || f.field() != gy.field())
    throw field_mismatch("substitution across different fields");
  Poly2 out(f.field(), gx.vars()[0], gx.vars()[1]);
  const Poly2 gy_named = gy.with_vars(gx.vars()[0], gx.vars()[1]);
  std::vector<Poly2> px{Poly2::constant(f.field().one(), gx.vars()[0], gx.vars()[1])};
  std::vector<Poly2> py{px[0]};
  for (int i = 1; i <= f.degree(0); ++i) px.push_back(px.back() * gx);
  for (int j = 1; j <= f.degree(1); ++j) py.push_back(py.back() * gy_named);
  for (const auto& [e, c] : f.terms()) out += c * px[e.first] * py[e.second];
  return out;
}

/// Quotient and remainder of f by g under lex order with u > v. The
/// remainder is zero iff g divides f.
inline std::pair<Poly2, Poly2> divrem(const Poly2& f, const Poly2& g) {
  if (g.is_zero()) throw domain_error("division by the zero polynomial");
  if (f.field() != g.field()) throw field_mismatch("division across different fields");
  const auto [ge, gc] = g.leading_term();
  const FieldElement ginv = gc.inverse();
  const auto& names = f.vars();
  Poly2 q(f.field(), names[0], names[1]);
  Poly2 r(f.field(), names[0], names[1]);
  Poly2 rest = f;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading_term();
    if (e.first >= ge.first && e.second >= ge.second) {
      const Poly2 t = Poly2::monomial(c * ginv, e.first - ge.first, e.second - ge.second, names[0], names[1]);
      q += t;
      rest -= t * g;
    } else {
      const Poly2 t = Poly2::monomial(c, e.first, e.second, names[0], names[1]);
      r += t;
      rest -= t;
    }
  }
  return {q, r};
}

namespace detail {

inline Poly2 laplace_det(const std::vector<std::vector<Poly2>>& m, const Poly2& zero) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly2 det = zero;
  for (std::size_t row = 0; row < n; ++row) {
    if (m[row][0].is_zero()) continue;
    std::vector<std::vector<Poly2>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    Poly2 term = m[row][0] * laplace_det(minor, zero);
    det = row % 2 ? det - term : det + term;
  }
  return det;
}

}  // namespace detail

/// Resultant with respect to an eliminated variable t of A = sum a[i] t^i and
/// B = sum b[j] t^j (coefficients low to high), via the Sylvester determinant.
inline Poly2 resultant(std::vector<Poly2> a, std::vector<Poly2> b) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  while (!b.empty() && b.back().is_zero()) b.pop_back();
  if (a.empty() || b.empty()) throw domain_error("resultant of a zero polynomial");
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const Poly2 zero(a[0].field(), a[0].vars()[0], a[0].vars()[1]);
  if (m + n == 0) return Poly2::constant(a[0].field().one(), a[0].vars()[0], a[0].vars()[1]);
  if (m + n > 8) throw domain_error("resultant size beyond the Laplace expansion limit");
  const std::size_t size = m + n;
  std::vector<std::vector<Poly2>> syl(size, std::vector<Poly2>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) syl[n + r][r + j] = b[n - j];
  return detail::laplace_det(syl, zero);
}

/// If a = s * b for a nonzero scalar s, returns s.
inline std::optional<FieldElement> scalar_ratio(const Poly2& a, const Poly2& b) {
  if (a.field() != b.field() || a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const FieldElement s = a.leading_term().second / b.leading_term().second;
  if (a == b * s) return s;
  return std::nullopt;
}

}  // namespace amlab

#endif  // AMLAB_POLY2_HPP
