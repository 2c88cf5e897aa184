#ifndef AMLAB_TEXT_HPP
#define AMLAB_TEXT_HPP

// Plain-text polynomial grammar shared by rendering and the CLI.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
//
// Integers are reduced mod p. Juxtaposition means "2x" is 2*x.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "amlab/error.hpp"
#include "amlab/gf.hpp"
#include "amlab/poly2.hpp"
#include "amlab/rational.hpp"

namespace amlab {

namespace detail {

template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(const Algebra& alg, std::string_view text) : alg_(alg), s_(text) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = alg_.add(v, term());
      } else if (peek('-')) {
        ++pos_;
        v = alg_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = alg_.mul(v, unary());
      } else if (peek('/')) {
        ++pos_;
        v = alg_.div(v, unary());
      } else if (starts_primary()) {
        v = alg_.mul(v, unary());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (peek('-')) {
      ++pos_;
      return alg_.neg(unary());
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::uint64_t e = 0;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
        if (e > 1'000'000) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected a non-negative integer exponent");
      return alg_.pow(base, e);
    }
    return base;
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return alg_.number(s_.substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (!alg_.has_variable(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return alg_.variable(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Algebra& alg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline FieldElement parse_integer(const Field& f, std::string_view digits) {
  std::int64_t r = 0;
  for (char d : digits) r = (r * 10 + (d - '0')) % f.p();
  return f.from_int(r);
}

struct RationalAlgebra {
  using Value = RationalFunction;
  Field field;
  std::string var;

  bool has_variable(const std::string& n) const { return n == var; }
  Value variable(const std::string&) const { return RationalFunction::x(field); }
  Value number(std::string_view d) const { return RationalFunction::constant(parse_integer(field, d)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (b.is_zero()) throw parse_error("division by zero in expression");
    return a / b;
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, std::uint64_t e) const { return a.pow(static_cast<std::int64_t>(e)); }
};

struct Poly2Algebra {
  using Value = Poly2;
  Field field;
  std::string u, v;

  bool has_variable(const std::string& n) const { return n == u || n == v; }
  Value variable(const std::string& n) const { return Poly2::variable(field, n == u ? 0 : 1, u, v); }
  Value number(std::string_view d) const { return Poly2::constant(parse_integer(field, d), u, v); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (b.total_degree() != 0) throw parse_error("polynomial expressions only allow division by constants");
    return a * b.coeff(0, 0).inverse();
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, std::uint64_t e) const { return a.pow(e); }
};

}  // namespace detail

/// Parse a univariate rational function, e.g. "2x + 1/x" or "(x^2+1)/(x-1)".
inline RationalFunction parse_rational(const Field& f, std::string_view text, const std::string& var = "x") {
  detail::RationalAlgebra alg{f, var};
  return detail::ExprParser<detail::RationalAlgebra>(alg, text).parse();
}

/// Parse a bivariate polynomial in variables u and v, e.g. "x^3*y^3 + 2*x*y".
inline Poly2 parse_poly2(const Field& f, std::string_view text, const std::string& u = "x",
                         const std::string& v = "y") {
  if (!f.is_prime_field()) throw domain_error("text grammar coefficients are prime-field integers");
  detail::Poly2Algebra alg{f, u, v};
  return detail::ExprParser<detail::Poly2Algebra>(alg, text).parse();
}

}  // namespace amlab

#endif  // AMLAB_TEXT_HPP
