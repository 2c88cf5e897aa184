#include <gtest/gtest.h>

#include <random>

#include "amlab/ascover.hpp"
#include "amlab/text.hpp"

using namespace amlab;

namespace {

RationalFunction rf(std::uint32_t p, const std::string& s) { return parse_rational(make_field(p, 1), s); }

ASCover cover(std::uint32_t p, const std::string& s) { return ASCover{rf(p, s)}; }

std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * ((n - i) % p) % p * detail::mod_inv(static_cast<std::uint32_t>((i + 1) % p), static_cast<std::uint32_t>(p)) % p;
  return r;
}

// Ramification groups of y^p - y = f at a pole of order m, computed from a
// local uniformizer t^a y^b upstairs (p a - m b = 1, t a uniformizer below):
// sigma_k moves it by t^a ((y + k)^b - y^b), whose valuation is p a - m j for
// the largest j < b with a nonzero binomial term. Needs b < p so binomials
// reduce mod p directly (no carries).
std::vector<std::uint64_t> filtration_oracle(std::uint32_t p, std::uint32_t m) {
  std::uint32_t b = 1;
  while ((static_cast<std::uint64_t>(m) * b + 1) % p != 0) ++b;
  const std::int64_t a = (static_cast<std::int64_t>(m) * b + 1) / p;
  std::vector<std::int64_t> v;
  for (std::uint32_t k = 1; k < p; ++k) {
    std::int64_t j = -1;
    for (std::uint32_t i = 0; i < b; ++i) {
      std::uint64_t kp = 1;
      for (std::uint32_t e = 0; e < b - i; ++e) kp = kp * k % p;
      if (binom_mod(b, i, p) * kp % p) j = i;
    }
    v.push_back(static_cast<std::int64_t>(p) * a - static_cast<std::int64_t>(m) * j);
  }
  std::vector<std::uint64_t> orders;
  for (std::int64_t i = 0;; ++i) {
    std::uint32_t n = 1;
    for (auto vk : v)
      if (vk >= i + 1) ++n;
    orders.push_back(n);
    if (n == 1) break;
  }
  return orders;
}

}  // namespace

TEST(Reduce, CancelsPolesOfOrderDivisibleByP) {
  EXPECT_EQ(reduce_standard_form(rf(3, "1/x^3")), rf(3, "1/x"));
  EXPECT_EQ(reduce_standard_form(rf(5, "x^5")), rf(5, "x"));
  EXPECT_EQ(reduce_standard_form(rf(3, "x^3 + x")), rf(3, "2x"));
  EXPECT_EQ(reduce_standard_form(rf(5, "x^25 + 1/x")), rf(5, "x + 1/x"));
  EXPECT_EQ(reduce_standard_form(rf(5, "2x + 1/x")), rf(5, "2x + 1/x"));
  // Pole of order p at a place of degree 2.
  const auto r = reduce_standard_form(rf(3, "1/(x^2 + 1)^3"));
  EXPECT_TRUE(is_reduced(r));
  EXPECT_EQ(r.denominator(), rf(3, "x^2 + 1").numerator());
}

TEST(Reduce, WitnessIdentityAndIdempotence) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field f = make_field(p, 1);
    std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
    std::uniform_int_distribution<int> e(1, 2 * static_cast<int>(p) + 1);
    int done = 0;
    while (done < 60) {
      // Random sums of c x^e, c / x^e and c / (x - 1)^e.
      RationalFunction g{Poly1(f)};
      for (int t = 0; t < 3; ++t) {
        const std::string term = std::to_string(c(rng)) + "*x^" + std::to_string(e(rng));
        g = g + rf(p, term) + rf(p, std::to_string(c(rng)) + "/x^" + std::to_string(e(rng))) +
            rf(p, std::to_string(c(rng)) + "/(x - 1)^" + std::to_string(e(rng)));
      }
      Reduction red;
      try {
        red = reduce_with_witness(g);
      } catch (const domain_error&) {
        continue;
      }
      ++done;
      EXPECT_EQ(g - red.reduced, red.u.pow(p) - red.u);
      EXPECT_TRUE(is_reduced(red.reduced));
      EXPECT_EQ(reduce_standard_form(red.reduced), red.reduced);
    }
  }
}

TEST(Reduce, Errors) {
  EXPECT_THROW(reduce_with_witness(rf(3, "x^3 - x")), domain_error);
  EXPECT_TRUE(in_artin_schreier_image(rf(3, "x^3 - x")));
  EXPECT_TRUE(in_artin_schreier_image(rf(5, "1/x^5 - 1/x")));
  EXPECT_FALSE(in_artin_schreier_image(rf(3, "x^3 - x + 1")));
  try {
    reduce_with_witness(rf(3, "x^3 - x + 1"));
    FAIL();
  } catch (const domain_error& e) {
    EXPECT_EQ(std::string(e.what()), "constant field extension, not a geometric cover");
  }
  EXPECT_THROW(riemann_hurwitz(cover(3, "1/x^3")), domain_error);
  EXPECT_THROW(ramification_filtration(cover(3, "x^3"), Place::infinite(make_field(3, 1))), domain_error);
}

TEST(Ramification, FiltrationMatchesLocalUniformizer) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t m = 1; m <= 2 * p + 3; ++m) {
      if (m % p == 0) continue;
      const auto d = ramification_filtration(cover(p, "x^" + std::to_string(m)), Place::infinite(make_field(p, 1)));
      EXPECT_EQ(d.jump, m);
      EXPECT_EQ(d.filtration_orders, filtration_oracle(p, m)) << "p=" << p << " m=" << m;
      // Same at a finite place.
      const auto e = ramification_filtration(cover(p, "1/x^" + std::to_string(m)), Place::at(make_field(p, 1).zero()));
      EXPECT_EQ(e.filtration_orders, d.filtration_orders);
    }
}

TEST(Ramification, UnramifiedPlace) {
  const auto d = ramification_filtration(cover(5, "2x + 1/x"), Place::at(make_field(5, 1).one()));
  EXPECT_FALSE(d.ramified());
  EXPECT_EQ(d.filtration_orders, (std::vector<std::uint64_t>{1}));
}

TEST(Genus, Examples) {
  EXPECT_EQ(analyze_cover(cover(3, "x + 1/x")).genus->value, 2);
  const auto r = analyze_cover(cover(5, "2x + 1/x"));
  EXPECT_EQ(r.genus->value, 4);
  EXPECT_EQ(r.genus->formula, "rh");
  EXPECT_EQ(r.p_rank->value, 4);
  EXPECT_EQ(r.p_rank->formula, "ds");
  EXPECT_EQ(r.different_degree, 16);
  EXPECT_EQ(analyze_cover(cover(7, "x")).genus->value, 0);
  EXPECT_EQ(analyze_cover(cover(7, "x")).p_rank->value, 0);
  // One pole of order 2 at infinity: p-rank 0.
  const auto s = analyze_cover(cover(5, "x^2"));
  EXPECT_EQ(s.genus->value, 2);
  EXPECT_EQ(s.p_rank->value, 0);
  // Degree 2 place: counts twice.
  const auto t = analyze_cover(cover(3, "1/(x^2 + 1)"));
  EXPECT_EQ(t.genus->value, 2);
  EXPECT_EQ(t.p_rank->value, 2);
}

TEST(Genus, TwoPoleFamilyForAllSmallPrimes) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t a = 1; a < p; ++a) {
      const auto r = analyze_cover(cover(p, std::to_string(a) + "x + 1/x"));
      EXPECT_EQ(r.genus->value, static_cast<std::int64_t>(p) - 1);
      EXPECT_EQ(r.p_rank->value, static_cast<std::int64_t>(p) - 1);
      EXPECT_EQ(r.ramified.size(), 2u);
    }
}

TEST(Genus, PRankBetweenZeroAndGenusAndBoundIsStrict) {
  std::mt19937_64 rng(9);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    std::uniform_int_distribution<std::uint32_t> c(1, p - 1);
    std::uniform_int_distribution<int> e(1, 2 * static_cast<int>(p));
    for (int n = 0; n < 40; ++n) {
      const std::string s = std::to_string(c(rng)) + "x^" + std::to_string(e(rng)) + " + " + std::to_string(c(rng)) +
                            "/(x - 2)^" + std::to_string(e(rng));
      ASCover cv{reduce_standard_form(rf(p, s))};
      const auto r = analyze_cover(cv);
      EXPECT_GE(r.p_rank->value, 0);
      EXPECT_LE(r.p_rank->value, r.genus->value);
      // Wild ramification: the different exceeds the tame contribution.
      EXPECT_GT(r.bound->lhs, r.bound->rhs) << s;
      EXPECT_FALSE(r.bound->equality);
      EXPECT_FALSE(r.bound->tame);
    }
  }
}

TEST(DeuringShafarevich, AbstractData) {
  const auto r = deuring_shafarevich(AbstractCoverData{3, 9, 0, 0, {3, 3}});
  EXPECT_EQ(r.p_rank->value, 4);
  EXPECT_THROW(deuring_shafarevich(AbstractCoverData{3, 6, 0, 0, {3}}), domain_error);
  EXPECT_THROW(deuring_shafarevich(AbstractCoverData{3, 9, 0, 0, {2}}), domain_error);
  EXPECT_THROW(deuring_shafarevich(AbstractCoverData{3, 9, 0, 0, {9}}), domain_error);
  EXPECT_EQ(deuring_shafarevich(AbstractCoverData{5, 25, 1, 1, {}}).p_rank->value, 1);
}

TEST(Composite, GenusAndPRank) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto r = composite_report(p);
    const std::int64_t g = (static_cast<std::int64_t>(p) - 1) * (p - 1);
    EXPECT_EQ(r.genus->value, g);
    EXPECT_EQ(r.genus->formula, "plucker");
    EXPECT_EQ(r.p_rank->value, g);
    EXPECT_EQ(r.p_rank->formula, "ds");
  }
  EXPECT_THROW(composite_report(4), domain_error);
}
