#ifndef AMLAB_RATIONAL_HPP
#define AMLAB_RATIONAL_HPP

// Univariate rational functions in reduced form and places of the rational
// function field F_q(x): monic irreducibles plus the infinite place.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amlab/error.hpp"
#include "amlab/poly1.hpp"

namespace amlab {

/// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Poly1 num) : num_(std::move(num)), den_(Poly1::constant(num_.field().one())) {}
  RationalFunction(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("zero denominator");
    if (num_.field() != den_.field()) throw field_mismatch("numerator and denominator fields differ");
    normalize();
  }

  static RationalFunction x(Field f) { return RationalFunction(Poly1::x(f)); }
  static RationalFunction constant(const FieldElement& c) { return RationalFunction(Poly1::constant(c)); }

  Field field() const { return num_.field(); }
  const Poly1& numerator() const { return num_; }
  const Poly1& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw domain_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const FieldElement& s) {
    return RationalFunction(a.num_ * s, a.den_);
  }

  RationalFunction pow(std::int64_t e) const {
    if (e < 0) {
      if (is_zero()) throw domain_error("negative power of zero");
      return RationalFunction(den_.pow(static_cast<std::uint64_t>(-e)), num_.pow(static_cast<std::uint64_t>(-e)));
    }
    return RationalFunction(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)), Reduced{});
  }

  /// Value at x, or nullopt at a pole.
  std::optional<FieldElement> operator()(const FieldElement& x) const {
    const FieldElement d = den_(x);
    if (d.is_zero()) return std::nullopt;
    return num_(x) / d;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const {
    if (den_.is_one()) return num_.to_string(var);
    auto wrap = [&](const Poly1& q) {
      std::string s = q.to_string(var);
      const bool bare = q.is_constant() || (q.degree() >= 1 && s.find(' ') == std::string::npos);
      return bare ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  struct Reduced {};
  RationalFunction(Poly1 num, Poly1 den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly1::constant(num_.field().one());
      return;
    }
    Poly1 g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const FieldElement lc = den_.leading();
    if (!lc.is_one()) {
      const FieldElement inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly1 num_;
  Poly1 den_;
};

class Place {
 public:
  enum class Kind { finite, infinite };

  static Place finite(Poly1 minimal_polynomial) {
    if (!minimal_polynomial.is_monic() || !is_irreducible(minimal_polynomial))
      throw domain_error("finite place needs a monic irreducible polynomial");
    return Place(Kind::finite, std::move(minimal_polynomial));
  }
  /// The place x = a.
  static Place at(const FieldElement& a) {
    return Place(Kind::finite, Poly1(a.field(), {-a, a.field().one()}));
  }
  static Place infinite(Field f) { return Place(Kind::infinite, Poly1(f)); }

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  const Poly1& minimal_polynomial() const { return pi_; }
  unsigned degree() const { return is_infinite() ? 1u : static_cast<unsigned>(pi_.degree()); }

  friend bool operator==(const Place& a, const Place& b) { return a.kind_ == b.kind_ && a.pi_ == b.pi_; }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  /// Finite places in polynomial order, then the infinite place.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.kind_ != b.kind_) return a.kind_ == Kind::finite;
    return a.pi_ < b.pi_;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_infinite()) return "inf";
    if (pi_.degree() == 1) return var + "=" + (-pi_.coeff(0)).to_string();
    return "(" + pi_.to_string(var) + ")";
  }

 private:
  Place(Kind k, Poly1 pi) : kind_(k), pi_(std::move(pi)) {}
  Kind kind_;
  Poly1 pi_;
};

using Divisor = std::vector<std::pair<Place, int>>;

/// Order of vanishing of f at P; negative at poles.
inline int valuation(const RationalFunction& f, const Place& P) {
  if (f.is_zero()) throw domain_error("valuation of the zero function is undefined");
  if (P.is_infinite()) return f.denominator().degree() - f.numerator().degree();
  return static_cast<int>(multiplicity(f.numerator(), P.minimal_polynomial())) -
         static_cast<int>(multiplicity(f.denominator(), P.minimal_polynomial()));
}

/// Places of negative valuation with their pole orders, finite places first.
inline Divisor pole_divisor(const RationalFunction& f) {
  if (f.is_zero()) throw domain_error("pole divisor of the zero function");
  Divisor out;
  for (auto& [pi, m] : factor(f.denominator())) out.emplace_back(Place::finite(pi), static_cast<int>(m));
  const int at_inf = f.numerator().degree() - f.denominator().degree();
  if (at_inf > 0) out.emplace_back(Place::infinite(f.field()), at_inf);
  return out;
}

/// div(f): every place with nonzero valuation, sorted.
inline Divisor principal_divisor(const RationalFunction& f) {
  if (f.is_zero()) throw domain_error("divisor of the zero function");
  Divisor out;
  for (auto& [pi, m] : factor(f.numerator())) out.emplace_back(Place::finite(pi), static_cast<int>(m));
  for (auto& [pi, m] : factor(f.denominator())) out.emplace_back(Place::finite(pi), -static_cast<int>(m));
  const int at_inf = f.denominator().degree() - f.numerator().degree();
  if (at_inf != 0) out.emplace_back(Place::infinite(f.field()), at_inf);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

inline long divisor_degree(const Divisor& d) {
  long s = 0;
  for (const auto& [P, n] : d) s += static_cast<long>(P.degree()) * n;
  return s;
}

}  // namespace amlab

#endif  // AMLAB_RATIONAL_HPP
