#include <gtest/gtest.h>

#include <random>
#include <set>

#include "amlab/curve.hpp"
#include "amlab/zeta.hpp"

using namespace amlab;

namespace {

// Image of a branch place read off the linear part directly: a diagonal map
// keeps the center and moves the tangent value by the entry on the other
// axis; an antidiagonal map swaps the centers.
CurvePoint branch_oracle(const AffineGroup& H, const GroupElement& g, const CurvePoint& P) {
  const std::uint32_t p = H.p();
  const Mat2 M = H.linear_part(g);
  const std::uint64_t t = P.tangent;
  if (M.e[1] == 0) {
    if (P.center == Center::O1) return CurvePoint::branch(Center::O1, (M.e[3] * t + g.b) % p);
    return CurvePoint::branch(Center::O2, (M.e[0] * t + g.a) % p);
  }
  if (P.center == Center::O1) return CurvePoint::branch(Center::O2, (M.e[1] * t + g.a) % p);
  return CurvePoint::branch(Center::O1, (M.e[2] * t + g.b) % p);
}

}  // namespace

TEST(Curve, EveryGroupElementIsAnAutomorphism) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const AffineGroup H(p);
    const AMCurve curve = AMCurve::make(p);
    std::uint64_t n = 0;
    for (const auto& g : H.elements()) {
      EXPECT_TRUE(verify_invariance(H, g, curve)) << g.to_string();
      ++n;
    }
    EXPECT_EQ(n, 2ull * p * p * (p - 1));
  }
}

TEST(Curve, RandomNonAutomorphismsAreRejected) {
  std::mt19937_64 rng(21);
  int rejected = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field f = make_field(p, 1);
    const AffineGroup H(p);
    const AMCurve curve = AMCurve::make(p);
    std::set<std::array<std::uint32_t, 6>> group_maps;
    for (const auto& g : H.elements()) {
      const Mat2 M = H.linear_part(g);
      group_maps.insert({M.e[0], M.e[1], M.e[2], M.e[3], g.a, g.b});
    }
    const Poly2 x = Poly2::variable(f, 0), y = Poly2::variable(f, 1);
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    int made = 0;
    while (made < (p == 7 ? 34 : 33)) {
      std::array<std::uint32_t, 6> m{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
      if ((m[0] * m[3] + p * p - m[1] * m[2] % p) % p == 0 || group_maps.count(m)) continue;
      // Half of the corpus gets a nonlinear term so it is not affine either.
      Poly2 gx = f.from_int(m[0]) * x + f.from_int(m[1]) * y + f.from_int(m[4]);
      Poly2 gy = f.from_int(m[2]) * x + f.from_int(m[3]) * y + f.from_int(m[5]);
      if (made % 2) gx += y * y;
      ++made;
      if (!is_invariant(curve.polynomial(), gx, gy)) ++rejected;
    }
  }
  EXPECT_EQ(rejected, 100);
}

TEST(Curve, BranchActionMatchesLinearPartOracle) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const AffineGroup H(p);
    const AMCurve curve = AMCurve::make(p);
    for (const auto& g : H.elements())
      for (const auto& P : branch_places(p)) EXPECT_EQ(apply_automorphism(H, g, P, curve), branch_oracle(H, g, P));
  }
}

TEST(Curve, ActionRespectsComposition) {
  for (std::uint32_t p : {3u, 5u}) {
    const AffineGroup H(p);
    const AMCurve curve = AMCurve::make(p);
    const auto points = enumerate_points(curve, 2);
    const auto elems = H.elements();
    for (const auto& g : elems)
      for (const auto& h : elems) {
        const auto gh = H.compose(g, h);
        for (std::size_t i = 0; i < points.size(); i += p == 3 ? 1 : 5) {
          const auto& P = points[i];
          EXPECT_EQ(apply_automorphism(H, gh, P, curve), apply_automorphism(H, g, apply_automorphism(H, h, P, curve), curve));
        }
      }
  }
}

TEST(Curve, EnumeratedPointsLieOnTheCurve) {
  for (auto [p, k] : {std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{7u, 1u}}) {
    const AMCurve curve = AMCurve::make(p);
    const Field K = make_field(p, k);
    const Poly2 F = curve.polynomial().over(K);
    const auto pts = enumerate_points(curve, k);
    std::uint64_t branches = 0;
    for (const auto& P : pts) {
      if (P.is_branch()) {
        ++branches;
        continue;
      }
      EXPECT_TRUE(F(P.x, P.y).is_zero());
    }
    EXPECT_EQ(branches, 2ull * p);
    EXPECT_EQ(pts.size(), count_points(curve, k));
  }
}

TEST(Curve, EnumerationBudget) {
  EXPECT_THROW(enumerate_points(AMCurve::make(13), 3, 1000), budget_exceeded);
}

TEST(Orbits, TranslationsHaveTwoShortOrbits) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const AffineGroup H(p);
    const AMCurve curve = AMCurve::make(p);
    const auto rep = short_orbits(curve, H, {H.tau(1, 0), H.tau(0, 1)}, p == 3 ? 2 : 1);
    EXPECT_EQ(rep.group_order, std::uint64_t(p) * p);
    ASSERT_EQ(rep.short_orbits.size(), 2u);
    EXPECT_TRUE(rep.orbit_stabilizer_holds);
    const auto& a = rep.short_orbits[0];
    const auto& b = rep.short_orbits[1];
    EXPECT_EQ(a.points.size(), p);
    EXPECT_EQ(b.points.size(), p);
    EXPECT_EQ(a.stabilizer.size(), p);
    EXPECT_EQ(b.stabilizer.size(), p);
    EXPECT_NE(a.stabilizer, b.stabilizer);
    EXPECT_TRUE(a.common_stabilizer && b.common_stabilizer);
    EXPECT_EQ(a.stabilizer, H.closure({H.tau(1, 0)}));
    EXPECT_EQ(b.stabilizer, H.closure({H.tau(0, 1)}));
    for (auto s : rep.orbit_sizes) EXPECT_TRUE(s == p || s == std::uint64_t(p) * p);
  }
}

TEST(Orbits, AffineOrbitsOverF9AreRegular) {
  const AffineGroup H(3);
  const AMCurve curve = AMCurve::make(3);
  const auto rep = short_orbits(curve, H, {H.tau(1, 0), H.tau(0, 1)}, 2);
  std::uint64_t affine = 0;
  for (auto s : rep.orbit_sizes)
    if (s == 9) affine += s;
  EXPECT_EQ(affine, rep.points_enumerated - 6);
  EXPECT_GT(affine, 0u);
}

TEST(Orbits, OrbitStabilizerOnEveryEnumeratedPoint) {
  const AMCurve c3 = AMCurve::make(3);
  const AffineGroup H3(3);
  EXPECT_TRUE(short_orbits(c3, H3, {H3.tau(1, 0), H3.tau(0, 1), H3.U(), H3.V()}, 2).orbit_stabilizer_holds);
  EXPECT_TRUE(short_orbits(c3, H3, {H3.tau(1, 0), H3.tau(0, 1), H3.U(), H3.V()}, 3).orbit_stabilizer_holds);
  const AMCurve c5 = AMCurve::make(5);
  const AffineGroup H5(5);
  EXPECT_TRUE(short_orbits(c5, H5, {H5.tau(1, 0), H5.tau(0, 1), H5.U(), H5.V()}, 2).orbit_stabilizer_holds);
  EXPECT_TRUE(short_orbits(c5, H5, {H5.tau(1, -1)}, 2).orbit_stabilizer_holds);
}

TEST(Curve, HyperellipticWitness) {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint32_t a = 1; a < p; ++a) {
      const auto w = hyperelliptic_witness(VGVCurve::make(p, a));
      EXPECT_EQ(w.degree(0), 2);
      EXPECT_EQ(w.coeff(2, 0).to_uint(), a);
    }
  EXPECT_THROW(VGVCurve::make(5, 0), domain_error);
  EXPECT_THROW(AMCurve::make(5, 5), domain_error);
}
