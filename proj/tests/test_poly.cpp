#include <gtest/gtest.h>

#include <map>
#include <random>

#include "amlab/poly1.hpp"
#include "amlab/poly2.hpp"
#include "amlab/text.hpp"

using namespace amlab;

namespace {

Poly1 random_poly1(const Field& f, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<FieldElement> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(f.element(pick(rng)));
  return Poly1(f, c);
}

Poly2 random_poly2(const Field& f, int max_deg, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
  std::uniform_int_distribution<std::uint32_t> deg(0, static_cast<std::uint32_t>(max_deg));
  Poly2 r(f);
  for (int i = 0; i < terms; ++i) r += Poly2::monomial(f.element(pick(rng)), deg(rng), deg(rng));
  return r;
}

// Number of monic irreducibles of degree n over F_q.
std::uint64_t necklace(std::uint64_t q, unsigned n) {
  auto mobius = [](unsigned m) {
    int r = 1;
    for (unsigned d = 2; d * d <= m; ++d) {
      if (m % d) continue;
      m /= d;
      if (m % d == 0) return 0;
      r = -r;
    }
    return m > 1 ? -r : r;
  };
  std::int64_t s = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::int64_t qp = 1;
    for (unsigned i = 0; i < n / d; ++i) qp *= static_cast<std::int64_t>(q);
    s += mobius(d) * qp;
  }
  return static_cast<std::uint64_t>(s / n);
}

}  // namespace

TEST(Poly1, DivmodIdentity) {
  std::mt19937_64 rng(1);
  for (const Field f : {make_field(3, 1), make_field(7, 1), make_field(5, 2)}) {
    for (int n = 0; n < 200; ++n) {
      const Poly1 a = random_poly1(f, 9, rng);
      Poly1 b = random_poly1(f, 5, rng);
      if (b.is_zero()) continue;
      const auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Poly1, GcdAndBezout) {
  std::mt19937_64 rng(2);
  const Field f = make_field(5, 1);
  for (int n = 0; n < 200; ++n) {
    const Poly1 common = random_poly1(f, 3, rng);
    const Poly1 a = random_poly1(f, 4, rng) * common, b = random_poly1(f, 4, rng) * common;
    if (a.is_zero() || b.is_zero()) continue;
    const auto [g, s, t] = xgcd(a, b);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    if (!common.is_zero()) EXPECT_TRUE((g % common.monic()).is_zero());
  }
}

TEST(Poly1, FactorReconstructs) {
  std::mt19937_64 rng(3);
  for (const Field f : {make_field(3, 1), make_field(5, 1), make_field(3, 2)}) {
    for (int n = 0; n < 60; ++n) {
      const Poly1 a = random_poly1(f, 8, rng);
      if (a.degree() < 1) continue;
      Poly1 prod = Poly1::constant(a.leading());
      for (const auto& [g, e] : factor(a)) {
        EXPECT_TRUE(is_irreducible(g));
        EXPECT_TRUE(g.is_monic());
        prod = prod * g.pow(e);
      }
      EXPECT_EQ(prod, a);
    }
  }
}

TEST(Poly1, FrobeniusPolynomialSplitsIntoAllIrreducibles) {
  // x^(q^n) - x is the product of all monic irreducibles of degree dividing n.
  for (auto [q, n] : {std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{7u, 2u}}) {
    const Field f = make_field(q, 1);
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    const Poly1 g = Poly1::monomial(f.one(), qn) - Poly1::x(f);
    std::map<int, std::uint64_t> by_degree;
    for (const auto& [h, e] : factor(g)) {
      EXPECT_EQ(e, 1u);
      ++by_degree[h.degree()];
    }
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) EXPECT_EQ(by_degree[static_cast<int>(d)], necklace(q, d));
  }
}

TEST(Poly1, DerivativeAndMultiplicity) {
  const Field f = make_field(3, 1);
  const Poly1 x = Poly1::x(f);
  const Poly1 pi = x * x + Poly1::constant(f.one());
  EXPECT_EQ(multiplicity(pi.pow(4) * (x + Poly1::constant(f.one())), pi), 4u);
  EXPECT_TRUE((x.pow(3) - x).derivative() == Poly1::constant(f.from_int(-1)));
}

TEST(Poly2, SubstitutionIsAHomomorphism) {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 1000; ++n) {
    const Field f = make_field(n % 2 ? 5 : 3, 1);
    const Poly2 a = random_poly2(f, 4, 4, rng), b = random_poly2(f, 4, 4, rng);
    const Poly2 gx = random_poly2(f, 2, 3, rng), gy = random_poly2(f, 2, 3, rng);
    EXPECT_EQ(substitute2(a + b, gx, gy), substitute2(a, gx, gy) + substitute2(b, gx, gy));
    EXPECT_EQ(substitute2(a * b, gx, gy), substitute2(a, gx, gy) * substitute2(b, gx, gy));
    // Evaluation commutes with substitution.
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    const auto u = f.element(pick(rng)), v = f.element(pick(rng));
    EXPECT_EQ(substitute2(a, gx, gy)(u, v), a(gx(u, v), gy(u, v)));
  }
}

TEST(Poly2, DivremIdentityAndDivisibility) {
  std::mt19937_64 rng(5);
  const Field f = make_field(7, 1);
  for (int n = 0; n < 200; ++n) {
    const Poly2 a = random_poly2(f, 4, 5, rng), g = random_poly2(f, 3, 3, rng);
    if (g.is_zero()) continue;
    const auto [q, r] = divrem(a, g);
    EXPECT_EQ(q * g + r, a);
    EXPECT_TRUE(divrem(a * g, g).second.is_zero());
  }
}

TEST(Poly2, ResultantEliminantOracle) {
  // Res_x(a x^2 - Y x + 1, Z x - 1) against Z^2 A(1/Z) evaluated pointwise.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field f = make_field(p, 1);
    const Poly2 y = Poly2::variable(f, 0, "y", "z"), z = Poly2::variable(f, 1, "y", "z");
    const Poly2 one = Poly2::constant(f.one(), "y", "z");
    for (std::uint32_t a = 1; a < p; ++a) {
      const FieldElement A = f.from_int(a);
      const Poly2 Y = y.pow(p) - y, Z = z.pow(p) - z;
      const Poly2 res = resultant({one, -Y, one * A}, {-one, Z});
      for (std::uint32_t i = 0; i < p; ++i)
        for (std::uint32_t j = 0; j < p; ++j) {
          const FieldElement yv = f.from_int(i) + f.one(), zv = f.from_int(j);
          const FieldElement Yv = yv.pow(p) - yv, Zv = zv.pow(p) - zv;
          // Z^2 A(1/Z) = a - Y Z + Z^2, also valid when Z = 0.
          const FieldElement expected = A - Yv * Zv + Zv * Zv;
          EXPECT_EQ(res(yv, zv), expected);
        }
    }
  }
}

TEST(Poly2, ScalarRatio) {
  const Field f = make_field(5, 1);
  const Poly2 x = Poly2::variable(f, 0), y = Poly2::variable(f, 1);
  const Poly2 g = x * y + f.one();
  EXPECT_EQ(scalar_ratio(g * f.from_int(3), g)->to_uint(), 3u);
  EXPECT_FALSE(scalar_ratio(g * x, g).has_value());
}

TEST(Text, RoundTrip) {
  const Field f = make_field(3, 1);
  const Poly2 g = parse_poly2(f, "x^3*y^3 + 2*x*y");
  EXPECT_EQ(g.to_string(), "x^3*y^3 + 2*x*y");
  EXPECT_EQ(parse_poly2(f, g.to_string()), g);
  EXPECT_EQ(parse_poly2(f, "2x*y + 4"), parse_poly2(f, "2*x*y + 1"));
  EXPECT_EQ(parse_poly2(f, "-(x - y)^3"), parse_poly2(f, "y^3 - x^3"));
  const RationalFunction r = parse_rational(make_field(5, 1), "2x + 1/x");
  EXPECT_EQ(r.to_string(), "(2*x^2 + 1)/x");
  EXPECT_EQ(parse_rational(make_field(5, 1), r.to_string()), r);
}

TEST(Text, Errors) {
  const Field f = make_field(5, 1);
  EXPECT_THROW(parse_rational(f, "2x + "), parse_error);
  EXPECT_THROW(parse_rational(f, "2q"), parse_error);
  EXPECT_THROW(parse_rational(f, "1/(x-x)"), parse_error);
  EXPECT_THROW(parse_poly2(f, "x/y"), parse_error);
  EXPECT_THROW(parse_poly2(f, "(x + y"), parse_error);
  EXPECT_THROW(parse_poly2(f, "x^"), parse_error);
}
