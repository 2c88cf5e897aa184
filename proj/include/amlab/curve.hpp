#ifndef AMLAB_CURVE_HPP
#define AMLAB_CURVE_HPP

// The Artin-Mumford curve (x^p - x)(y^p - y) = c, the curve
// y^p - y = a x + 1/x, their points, and the action of H on them.
//
// The plane model of the Artin-Mumford curve has two ordinary p-fold points
// O1 = (1:0:0) and O2 = (0:1:0). The places over them are labelled by tangent
// lines: y = t at O1 and x = t at O2, t in F_p. All 2p are F_p-rational.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "amlab/error.hpp"
#include "amlab/gf.hpp"
#include "amlab/grp.hpp"
#include "amlab/poly2.hpp"
#include "amlab/rational.hpp"

namespace amlab {

struct AMCurve {
  Field field;  // F_p
  FieldElement c;

  static AMCurve make(std::uint32_t p, std::int64_t c = 1) {
    const Field f = make_field(p, 1);
    AMCurve curve{f, f.from_int(c)};
    if (curve.c.is_zero()) throw domain_error("c must be nonzero");
    return curve;
  }

  std::uint32_t p() const { return field.p(); }

  /// (x^p - x)(y^p - y) - c.
  Poly2 polynomial() const {
    const Poly2 x = Poly2::variable(field, 0), y = Poly2::variable(field, 1);
    return (x.pow(p()) - x) * (y.pow(p()) - y) - c;
  }

  bool contains(const FieldElement& x, const FieldElement& y) const {
    const Field t = x.field();
    return (x.frobenius() - x) * (y.frobenius() - y) == t.embed(c);
  }
};

struct VGVCurve {
  Field field;
  FieldElement a;

  static VGVCurve make(std::uint32_t p, std::int64_t a) {
    const Field f = make_field(p, 1);
    VGVCurve curve{f, f.from_int(a)};
    if (curve.a.is_zero()) throw domain_error("a must be nonzero");
    return curve;
  }

  /// a x + 1/x.
  RationalFunction rhs() const {
    const RationalFunction x = RationalFunction::x(field);
    return x * a + x.pow(-1);
  }

  /// x (y^p - y) - (a x^2 + 1): the defining relation with x cleared.
  Poly2 cleared_relation() const {
    const Poly2 x = Poly2::variable(field, 0), y = Poly2::variable(field, 1);
    return x * (y.pow(field.p()) - y) - (a * x.pow(2) + field.one());
  }
};

enum class Center { O1, O2 };

struct CurvePoint {
  enum class Kind { affine, branch };
  Kind kind = Kind::affine;
  FieldElement x, y;          // affine only
  Center center = Center::O1;  // branch only
  std::uint32_t tangent = 0;   // branch only

  static CurvePoint affine(FieldElement x, FieldElement y) {
    CurvePoint P;
    P.x = x;
    P.y = y;
    return P;
  }
  static CurvePoint branch(Center c, std::uint32_t t) {
    CurvePoint P;
    P.kind = Kind::branch;
    P.center = c;
    P.tangent = t;
    return P;
  }

  bool is_branch() const { return kind == Kind::branch; }

  auto key() const {
    if (is_branch()) return std::make_tuple(1, static_cast<int>(center), std::uint64_t(tangent), std::uint64_t(0));
    return std::make_tuple(0, 0, x.index(), y.index());
  }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.key() == b.key(); }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) { return a.key() < b.key(); }

  std::string to_string() const {
    std::ostringstream os;
    if (is_branch())
      os << (center == Center::O1 ? "O1[y=" : "O2[x=") << tangent << "]";
    else
      os << "(" << x.to_string() << "," << y.to_string() << ")";
    return os.str();
  }
};

/// The 2p branch places, O1 first.
inline std::vector<CurvePoint> branch_places(std::uint32_t p) {
  std::vector<CurvePoint> out;
  for (Center c : {Center::O1, Center::O2})
    for (std::uint32_t t = 0; t < p; ++t) out.push_back(CurvePoint::branch(c, t));
  return out;
}

/// Affine points over F_{p^k} by exhaustive pair scan, followed by the branch places.
inline std::vector<CurvePoint> enumerate_points(const AMCurve& curve, std::uint32_t k,
                                                std::uint64_t budget = kDefaultBudget) {
  const Field f = make_field(curve.p(), k);
  const std::uint64_t q = f.order();
  if (q > (1ull << 31) || q * q > budget) throw budget_exceeded("point enumeration", q > (1ull << 31) ? ~0ull : q * q, budget);
  std::vector<FieldElement> elems, eta;
  elems.reserve(q);
  eta.reserve(q);
  for (std::uint64_t n = 0; n < q; ++n) {
    elems.push_back(f.element(n));
    eta.push_back(elems.back().frobenius() - elems.back());
  }
  const FieldElement c = f.embed(curve.c);
  std::vector<CurvePoint> out;
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j)
      if (eta[i] * eta[j] == c) out.push_back(CurvePoint::affine(elems[i], elems[j]));
  for (auto& b : branch_places(curve.p())) out.push_back(b);
  return out;
}

/// Coordinate functions (g_x, g_y) of g as polynomials in x, y.
inline std::pair<Poly2, Poly2> coordinate_action(const AffineGroup& H, const GroupElement& g) {
  const Field f = H.field();
  const Mat2 M = H.linear_part(g);
  const Poly2 x = Poly2::variable(f, 0), y = Poly2::variable(f, 1);
  const Poly2 gx = f.from_int(M.e[0]) * x + f.from_int(M.e[1]) * y + f.from_int(g.a);
  const Poly2 gy = f.from_int(M.e[2]) * x + f.from_int(M.e[3]) * y + f.from_int(g.b);
  return {gx, gy};
}

/// Image of P under g. Affine images are re-checked against the curve.
inline CurvePoint apply_automorphism(const AffineGroup& H, const GroupElement& g, const CurvePoint& P,
                                     const AMCurve& curve) {
  if (g.p != curve.p() || H.p() != curve.p()) throw domain_error("group and curve over different primes");
  const std::uint32_t p = H.p();
  if (P.is_branch()) {
    // V^s, then U^i = theta_d with d = l^i, then tau_{a,b}.
    Center c = P.center;
    std::uint64_t t = P.tangent;
    if (g.s) c = c == Center::O1 ? Center::O2 : Center::O1;
    const Mat2 U = H.linear_part({p, 0, 0, g.i, 0});
    const std::uint64_t d = U.e[0], d_inv = U.e[3];
    if (c == Center::O1)
      t = (t * d_inv + g.b) % p;
    else
      t = (t * d + g.a) % p;
    return CurvePoint::branch(c, static_cast<std::uint32_t>(t));
  }
  const Field f = P.x.field();
  const Mat2 M = H.linear_part(g);
  const FieldElement x = f.from_int(M.e[0]) * P.x + f.from_int(M.e[1]) * P.y + f.from_int(g.a);
  const FieldElement y = f.from_int(M.e[2]) * P.x + f.from_int(M.e[3]) * P.y + f.from_int(g.b);
  if (!curve.contains(x, y))
    throw invariant_violation("image of " + P.to_string() + " under " + g.to_string() + " is not on the curve");
  return CurvePoint::affine(x, y);
}

/// True iff F(g_x, g_y) = F exactly.
inline bool is_invariant(const Poly2& F, const Poly2& gx, const Poly2& gy) { return substitute2(F, gx, gy) == F; }

inline bool verify_invariance(const AffineGroup& H, const GroupElement& g, const AMCurve& curve) {
  const auto [gx, gy] = coordinate_action(H, g);
  return is_invariant(curve.polynomial(), gx, gy);
}

struct Orbit {
  std::vector<CurvePoint> points;         // sorted
  std::vector<GroupElement> stabilizer;   // of points.front(), sorted
  bool common_stabilizer = true;          // all points share it
};

struct OrbitReport {
  std::uint64_t group_order = 0;
  std::uint32_t k = 0;
  std::uint64_t points_enumerated = 0;
  std::vector<std::uint64_t> orbit_sizes;  // ascending
  std::vector<Orbit> short_orbits;
  bool orbit_stabilizer_holds = true;      // |orbit| * |stab| = |S| everywhere
};

/// Orbits of <gens> on the branch places and on the affine points over F_{p^k}
/// (k = 0 means branch places only).
inline OrbitReport short_orbits(const AMCurve& curve, const AffineGroup& H, const std::vector<GroupElement>& gens,
                                std::uint32_t k, std::uint64_t budget = kDefaultBudget) {
  const auto S = H.closure(gens);
  std::vector<CurvePoint> points = k == 0 ? branch_places(curve.p()) : enumerate_points(curve, k, budget);
  const std::uint64_t work = points.size() * S.size();
  if (work > budget) throw budget_exceeded("orbit computation", work, budget);

  OrbitReport rep;
  rep.group_order = S.size();
  rep.k = k;
  rep.points_enumerated = points.size();
  std::set<CurvePoint> seen;
  for (const auto& P : points) {
    if (seen.count(P)) continue;
    std::set<CurvePoint> orbit;
    std::vector<GroupElement> stab;
    for (const auto& g : S) {
      const CurvePoint Q = apply_automorphism(H, g, P, curve);
      orbit.insert(Q);
      if (Q == P) stab.push_back(g);
    }
    seen.insert(orbit.begin(), orbit.end());
    rep.orbit_sizes.push_back(orbit.size());
    if (orbit.size() * stab.size() != S.size()) rep.orbit_stabilizer_holds = false;
    if (orbit.size() < S.size()) {
      Orbit o{{orbit.begin(), orbit.end()}, stab, true};
      for (const auto& Q : o.points) {
        std::vector<GroupElement> sq;
        for (const auto& g : S)
          if (apply_automorphism(H, g, Q, curve) == Q) sq.push_back(g);
        if (sq != stab) o.common_stabilizer = false;
      }
      rep.short_orbits.push_back(std::move(o));
    }
  }
  std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
  return rep;
}

/// Minimal polynomial of x over F_p(y): a x^2 - (y^p - y) x + 1. Checked to
/// be quadratic in x and to equal minus the cleared curve relation.
inline Poly2 hyperelliptic_witness(const VGVCurve& curve) {
  const Field f = curve.field;
  const Poly2 x = Poly2::variable(f, 0), y = Poly2::variable(f, 1);
  Poly2 w = curve.a * x.pow(2) - (y.pow(f.p()) - y) * x + f.one();
  if (w.degree(0) != 2) throw invariant_violation("witness is not quadratic in x");
  if (!(w + curve.cleared_relation()).is_zero()) throw invariant_violation("witness does not vanish on the curve");
  return w;
}

}  // namespace amlab

#endif  // AMLAB_CURVE_HPP
