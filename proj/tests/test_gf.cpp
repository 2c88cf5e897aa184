#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "amlab/gf.hpp"

using namespace amlab;

namespace {

// Independent oracles on plain integer vectors (coefficients low to high).
std::uint32_t eval_mod(const std::vector<std::uint32_t>& f, std::uint32_t x, std::uint32_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % p;
  return static_cast<std::uint32_t>(r);
}

bool has_root(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x)
    if (eval_mod(f, x, p) == 0) return true;
  return false;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++r;
  return r;
}

}  // namespace

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(make_field(2, 1), domain_error);
  EXPECT_THROW(make_field(9, 1), domain_error);
  EXPECT_THROW(make_field(1, 1), domain_error);
  EXPECT_THROW(make_field(3, 0), domain_error);
  EXPECT_THROW(make_field(3, 40), domain_error);
}

TEST(Field, ModulusOfF9) {
  const Field f = make_field(3, 2);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(f.order(), 9u);
  EXPECT_EQ(f.name(), "F_3^2");
}

TEST(Field, LeastIrreducibleMatchesRootSearch) {
  // For degree 2 and 3, irreducible means no root; walk candidates with c0
  // most significant, then c1, ... and take the first one without a root.
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (std::uint32_t k : {2u, 3u}) {
      std::vector<std::uint32_t> expected;
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < k; ++i) count *= p;
      for (std::uint64_t n = 0; n < count && expected.empty(); ++n) {
        std::vector<std::uint32_t> f(k + 1, 0);
        std::uint64_t m = n;
        for (std::uint32_t i = k; i-- > 0;) {
          f[i] = static_cast<std::uint32_t>(m % p);
          m /= p;
        }
        f[k] = 1;
        if (!has_root(f, p)) expected = f;
      }
      EXPECT_EQ(make_field(p, k).modulus(), expected) << "p=" << p << " k=" << k;
    }
}

TEST(Field, PrimitiveElementsOfPrimeFields) {
  EXPECT_EQ(primitive_element(make_field(3, 1)).to_uint(), 2u);
  EXPECT_EQ(primitive_element(make_field(5, 1)).to_uint(), 2u);
  EXPECT_EQ(primitive_element(make_field(7, 1)).to_uint(), 3u);
  EXPECT_EQ(primitive_element(make_field(11, 1)).to_uint(), 2u);
  EXPECT_EQ(primitive_element(make_field(13, 1)).to_uint(), 2u);
}

TEST(Field, TraceInF9) {
  const Field f = make_field(3, 2);
  const FieldElement t = f.generator();  // t^2 = -1
  EXPECT_TRUE(trace(t).is_zero());
  EXPECT_EQ(trace(f.one()).to_uint(), 2u);
  EXPECT_EQ(trace(t + f.one()).to_uint(), 2u);
  EXPECT_EQ((t * t).to_string(), "[2,0]");
}

TEST(Field, AxiomsExhaustiveSmallFields) {
  for (auto [p, k] : {std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{3u, 3u}}) {
    const Field f = make_field(p, k);
    const auto q = f.order();
    for (std::uint64_t i = 0; i < q; ++i) {
      const FieldElement a = f.element(i);
      EXPECT_EQ(a.index(), i);
      EXPECT_EQ(a + (-a), f.zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), f.one());
        EXPECT_EQ(a.pow(q - 1), f.one());
        EXPECT_EQ((q - 1) % multiplicative_order(a), 0u);
      }
      EXPECT_EQ(a.pow(q), a);
      for (std::uint64_t j = 0; j < q; ++j) {
        const FieldElement b = f.element(j);
        EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
        EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
      }
    }
  }
}

TEST(Field, RandomDistributivity) {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair{7u, 4u}, std::pair{13u, 3u}, std::pair{11u, 11u}}) {
    const Field f = make_field(p, k);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    for (int n = 0; n < 300; ++n) {
      const auto a = f.element(pick(rng)), b = f.element(pick(rng)), c = f.element(pick(rng));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(Field, TraceIsSumOfConjugates) {
  for (auto [p, k] : {std::pair{3u, 4u}, std::pair{5u, 3u}, std::pair{7u, 2u}}) {
    const Field f = make_field(p, k);
    for (std::uint64_t i = 0; i < f.order(); i += 7) {
      const FieldElement a = f.element(i);
      FieldElement s = f.zero(), c = a;
      for (std::uint32_t j = 0; j < k; ++j) {
        s = s + c;
        c = c.pow(p);
      }
      ASSERT_TRUE(s.in_prime_field());
      EXPECT_EQ(trace(a).to_uint(), s.coeff(0));
    }
  }
}

TEST(Field, PrimitiveElementCountIsPhi) {
  for (auto [p, k] : {std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{3u, 3u}, std::pair{7u, 2u}}) {
    const Field f = make_field(p, k);
    std::uint64_t n = 0;
    for (std::uint64_t i = 1; i < f.order(); ++i)
      if (multiplicative_order(f.element(i)) == f.order() - 1) ++n;
    EXPECT_EQ(n, euler_phi(f.order() - 1));
  }
}

TEST(Field, EmbeddingAndMismatch) {
  const Field f3 = make_field(3, 1), f9 = make_field(3, 2), f5 = make_field(5, 1);
  const FieldElement two = f3.from_int(2);
  EXPECT_EQ(f9.embed(two), f9.from_int(2));
  EXPECT_THROW(f5.embed(two), field_mismatch);
  EXPECT_THROW(f9.generator() + f5.one(), field_mismatch);
  EXPECT_THROW(f9.generator().to_uint(), domain_error);
  EXPECT_THROW(f9.zero().inverse(), domain_error);
}

TEST(Field, FromIntReducesNegatives) {
  const Field f = make_field(7, 1);
  EXPECT_EQ(f.from_int(-1).to_uint(), 6u);
  EXPECT_EQ(f.from_int(15).to_uint(), 1u);
  EXPECT_EQ(f.from_int(-15).to_uint(), 6u);
}
