#ifndef AMLAB_GRP_HPP
#define AMLAB_GRP_HPP

// The group H = (C_p x C_p) x| D_{p-1} acting on the affine plane over F_p,
// 2x2 matrices over F_p, and the dihedral normal form in GL(2, p).
//
// Every element of H is stored as tau_{a,b} * U^i * V^s, i.e. the affine map
//   v -> U^i V^s v + (a, b)
// with U = diag(l, 1/l) for the least primitive root l and V the coordinate
// swap. On the curve coordinates U is theta_l : (x, y) -> (l x, y / l) and V is
// mu : (x, y) -> (y, x).

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "amlab/error.hpp"
#include "amlab/gf.hpp"

namespace amlab {

/// 2x2 matrix over F_p, row-major {a, b, c, d}.
struct Mat2 {
  std::uint32_t p = 0;
  std::array<std::uint32_t, 4> e{};

  static Mat2 make(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    auto r = [p](std::int64_t v) {
      std::int64_t m = v % static_cast<std::int64_t>(p);
      return static_cast<std::uint32_t>(m < 0 ? m + p : m);
    };
    return Mat2{p, {r(a), r(b), r(c), r(d)}};
  }
  static Mat2 identity(std::uint32_t p) { return make(p, 1, 0, 0, 1); }
  static Mat2 diag(std::uint32_t p, std::int64_t a, std::int64_t d) { return make(p, a, 0, 0, d); }
  static Mat2 antidiag(std::uint32_t p, std::int64_t b, std::int64_t c) { return make(p, 0, b, c, 0); }

  std::uint32_t det() const {
    const std::uint64_t ad = std::uint64_t(e[0]) * e[3] % p;
    const std::uint64_t bc = std::uint64_t(e[1]) * e[2] % p;
    return static_cast<std::uint32_t>((ad + p - bc) % p);
  }
  std::uint32_t trace() const { return (e[0] + e[3]) % p; }
  bool invertible() const { return det() != 0; }
  bool is_scalar() const { return e[1] == 0 && e[2] == 0 && e[0] == e[3]; }

  Mat2 inverse() const {
    const std::uint32_t d = det();
    if (d == 0) throw domain_error("singular matrix");
    const std::uint64_t inv = detail::mod_inv(d, p);
    return make(p, std::int64_t(e[3] * inv % p), -std::int64_t(e[1] * inv % p), -std::int64_t(e[2] * inv % p),
                std::int64_t(e[0] * inv % p));
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    if (x.p != y.p) throw domain_error("matrices over different primes");
    const std::uint64_t p = x.p;
    auto dot = [p](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
      return static_cast<std::uint32_t>((a * b + c * d) % p);
    };
    return Mat2{x.p,
                {dot(x.e[0], y.e[0], x.e[1], y.e[2]), dot(x.e[0], y.e[1], x.e[1], y.e[3]),
                 dot(x.e[2], y.e[0], x.e[3], y.e[2]), dot(x.e[2], y.e[1], x.e[3], y.e[3])}};
  }

  Mat2 pow(std::uint64_t n) const {
    Mat2 r = identity(p);
    Mat2 b = *this;
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }

  std::array<std::uint32_t, 2> apply(std::array<std::uint32_t, 2> v) const {
    const std::uint64_t q = p;
    return {static_cast<std::uint32_t>((std::uint64_t(e[0]) * v[0] + std::uint64_t(e[1]) * v[1]) % q),
            static_cast<std::uint32_t>((std::uint64_t(e[2]) * v[0] + std::uint64_t(e[3]) * v[1]) % q)};
  }

  friend bool operator==(const Mat2& x, const Mat2& y) { return x.p == y.p && x.e == y.e; }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
  friend bool operator<(const Mat2& x, const Mat2& y) { return x.e < y.e; }

  std::string to_string() const {
    std::ostringstream os;
    os << "[[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3] << "]]";
    return os.str();
  }
};

/// Multiplicative order of an invertible matrix.
inline std::uint64_t order(const Mat2& m) {
  if (!m.invertible()) throw domain_error("order of a singular matrix");
  Mat2 x = m;
  const Mat2 id = Mat2::identity(m.p);
  for (std::uint64_t n = 1;; ++n) {
    if (x == id) return n;
    x = x * m;
  }
}

/// Closure of a set of invertible matrices under multiplication, sorted.
inline std::vector<Mat2> generated_group(const std::vector<Mat2>& gens, std::size_t limit = 1u << 20) {
  if (gens.empty()) throw domain_error("no generators");
  std::set<Mat2> seen{Mat2::identity(gens[0].p)};
  std::deque<Mat2> todo{Mat2::identity(gens[0].p)};
  while (!todo.empty()) {
    const Mat2 m = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Mat2 n = m * g;
      if (seen.insert(n).second) {
        if (seen.size() > limit) throw domain_error("generated group exceeds the size limit");
        todo.push_back(n);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// tau_{a,b} U^i V^s.
struct GroupElement {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t i = 0;
  std::uint32_t s = 0;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.p == y.p && x.a == y.a && x.b == y.b && x.i == y.i && x.s == y.s;
  }
  friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
  friend bool operator<(const GroupElement& x, const GroupElement& y) {
    return std::tie(x.s, x.i, x.a, x.b) < std::tie(y.s, y.i, y.a, y.b);
  }

  bool is_translation() const { return i == 0 && s == 0; }

  std::string to_string() const {
    std::ostringstream os;
    os << "tau(" << a << "," << b << ")";
    if (i) os << "*U^" << i;
    if (s) os << "*V";
    return os.str();
  }
};

class AffineGroup {
 public:
  explicit AffineGroup(std::uint32_t p) : field_(make_field(p, 1)), p_(p) {
    lambda_ = primitive_element(field_).to_uint();
    pow_.resize(p - 1);
    log_.assign(p, 0);
    std::uint64_t x = 1;
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
      pow_[i] = static_cast<std::uint32_t>(x);
      log_[x] = i;
      x = x * lambda_ % p;
    }
  }

  std::uint32_t p() const { return p_; }
  Field field() const { return field_; }
  /// The primitive root l fixing U = diag(l, 1/l).
  std::uint32_t lambda() const { return lambda_; }
  std::uint64_t order() const { return 2ull * p_ * p_ * (p_ - 1); }

  GroupElement identity() const { return {p_, 0, 0, 0, 0}; }
  GroupElement tau(std::int64_t a, std::int64_t b) const { return {p_, red(a), red(b), 0, 0}; }
  GroupElement U() const { return {p_, 0, 0, 1 % (p_ - 1), 0}; }
  GroupElement V() const { return {p_, 0, 0, 0, 1}; }
  GroupElement mu() const { return V(); }
  /// W = U^((p-1)/2) = -1 on the plane.
  GroupElement W() const { return {p_, 0, 0, (p_ - 1) / 2, 0}; }
  /// theta_d : (x, y) -> (d x, y / d).
  GroupElement theta(std::int64_t d) const {
    const std::uint32_t r = red(d);
    if (r == 0) throw domain_error("theta_d needs d != 0");
    return {p_, 0, 0, log_[r], 0};
  }

  Mat2 linear_part(const GroupElement& g) const {
    check(g);
    const std::uint32_t l = pow_[g.i];
    const std::uint32_t li = pow_[(p_ - 1 - g.i) % (p_ - 1)];
    Mat2 u = Mat2::diag(p_, l, li);
    return g.s ? u * Mat2::antidiag(p_, 1, 1) : u;
  }

  std::array<std::uint32_t, 2> apply(const GroupElement& g, std::array<std::uint32_t, 2> v) const {
    auto w = linear(g.i, g.s, v);
    return {(w[0] + g.a) % p_, (w[1] + g.b) % p_};
  }

  /// g o h as maps: first h, then g.
  GroupElement compose(const GroupElement& g, const GroupElement& h) const {
    check(g);
    check(h);
    const std::uint32_t n = p_ - 1;
    const std::uint32_t i = g.s ? (g.i + n - h.i) % n : (g.i + h.i) % n;
    const auto t = linear(g.i, g.s, {h.a, h.b});
    return {p_, (t[0] + g.a) % p_, (t[1] + g.b) % p_, i, (g.s + h.s) % 2};
  }

  GroupElement inverse(const GroupElement& g) const {
    check(g);
    const std::uint32_t n = p_ - 1;
    // (U^i V^s)^-1 is U^-i when s = 0 and U^i V when s = 1.
    const std::uint32_t i = g.s ? g.i : (n - g.i) % n;
    const auto t = linear(i, g.s, {g.a, g.b});
    return {p_, (p_ - t[0]) % p_, (p_ - t[1]) % p_, i, g.s};
  }

  GroupElement power(GroupElement g, std::uint64_t e) const {
    GroupElement r = identity();
    while (e) {
      if (e & 1) r = compose(r, g);
      g = compose(g, g);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t element_order(const GroupElement& g) const {
    GroupElement x = g;
    for (std::uint64_t n = 1;; ++n) {
      if (x == identity()) return n;
      x = compose(x, g);
    }
  }

  /// All 2p^2(p-1) elements in canonical order.
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    for (std::uint32_t s = 0; s < 2; ++s)
      for (std::uint32_t i = 0; i + 1 < p_; ++i)
        for (std::uint32_t a = 0; a < p_; ++a)
          for (std::uint32_t b = 0; b < p_; ++b) out.push_back({p_, a, b, i, s});
    return out;
  }

  std::vector<GroupElement> translations() const {
    std::vector<GroupElement> out;
    for (std::uint32_t a = 0; a < p_; ++a)
      for (std::uint32_t b = 0; b < p_; ++b) out.push_back(tau(a, b));
    return out;
  }

  /// Subgroup generated by `gens`, sorted.
  std::vector<GroupElement> closure(const std::vector<GroupElement>& gens) const {
    std::set<GroupElement> seen{identity()};
    std::deque<GroupElement> todo{identity()};
    while (!todo.empty()) {
      const GroupElement x = todo.front();
      todo.pop_front();
      for (const auto& g : gens) {
        const GroupElement y = compose(x, g);
        if (seen.insert(y).second) todo.push_back(y);
      }
    }
    return {seen.begin(), seen.end()};
  }

  /// The translation subgroup T_1 = {tau_{a,a}} or T_2 = {tau_{a,-a}}.
  std::vector<GroupElement> diagonal_translations(int sign) const {
    std::vector<GroupElement> out;
    for (std::uint32_t a = 0; a < p_; ++a) out.push_back(tau(a, sign > 0 ? std::int64_t(a) : -std::int64_t(a)));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::uint32_t red(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
  }
  void check(const GroupElement& g) const {
    if (g.p != p_) throw domain_error("group element for a different prime");
  }
  // U^i V^s applied to v.
  std::array<std::uint32_t, 2> linear(std::uint32_t i, std::uint32_t s, std::array<std::uint32_t, 2> v) const {
    if (s) std::swap(v[0], v[1]);
    const std::uint64_t l = pow_[i % (p_ - 1)];
    const std::uint64_t li = pow_[(p_ - 1 - i % (p_ - 1)) % (p_ - 1)];
    return {static_cast<std::uint32_t>(l * v[0] % p_), static_cast<std::uint32_t>(li * v[1] % p_)};
  }

  Field field_;
  std::uint32_t p_;
  std::uint32_t lambda_ = 0;
  std::vector<std::uint32_t> pow_;
  std::vector<std::uint32_t> log_;
};

struct IdentityCheck {
  std::string identity;
  bool status = false;
};

struct PresentationReport {
  std::uint32_t p = 0;
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;  // |<tau_{1,1}, V, W>|
  std::vector<IdentityCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.status; });
  }
};

namespace detail {

inline std::set<GroupElement> product_set(const AffineGroup& H, const std::vector<GroupElement>& A,
                                          const std::vector<GroupElement>& B) {
  std::set<GroupElement> out;
  for (const auto& a : A)
    for (const auto& b : B) out.insert(H.compose(a, b));
  return out;
}

}  // namespace detail

/// Exhaustively checks the defining relations of H, the faithfulness of its
/// action on F_p^2, and the identities around T_2 = {tau_{a,-a}},
/// W = U^((p-1)/2) and <tau_{1,1}, V, W>. Failures are entries, not exceptions.
inline PresentationReport verify_presentation(std::uint32_t p) {
  const AffineGroup H(p);
  PresentationReport rep;
  rep.p = p;
  auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };

  // Order and faithfulness: distinct canonical forms give distinct permutations.
  const auto all = H.elements();
  std::set<std::vector<std::uint32_t>> perms;
  for (const auto& g : all) {
    std::vector<std::uint32_t> img;
    img.reserve(std::size_t(p) * p);
    for (std::uint32_t x = 0; x < p; ++x)
      for (std::uint32_t y = 0; y < p; ++y) {
        auto v = H.apply(g, {x, y});
        img.push_back(v[0] * p + v[1]);
      }
    perms.insert(std::move(img));
  }
  rep.group_order = perms.size();
  add("|H| = 2p^2(p-1)", perms.size() == H.order() && all.size() == H.order());

  const GroupElement id = H.identity(), U = H.U(), V = H.V(), W = H.W();
  const Mat2 Um = H.linear_part(U), Vm = H.linear_part(V), I = Mat2::identity(p);
  add("U^(p-1) = 1", H.power(U, p - 1) == id && Um.pow(p - 1) == I);
  add("U has order p-1", H.element_order(U) == p - 1 && order(Um) == p - 1);
  add("V^2 = 1", H.power(V, 2) == id && Vm * Vm == I);
  add("VUV = U^-1", H.compose(H.compose(V, U), V) == H.inverse(U) && Vm * Um * Vm == Um.inverse());
  add("U = diag(l, l^-1), V = antidiag(1, 1)",
      Um == Mat2::diag(p, H.lambda(), detail::mod_inv(H.lambda(), p)) && Vm == Mat2::antidiag(p, 1, 1));

  const GroupElement t11 = H.tau(1, 1);
  const auto T2 = H.diagonal_translations(-1);
  add("tau_{1,1} T_2 = T_2 tau_{1,1}", detail::product_set(H, {t11}, T2) == detail::product_set(H, T2, {t11}));
  add("tau_{1,1} V = V tau_{1,1}", H.compose(t11, V) == H.compose(V, t11));

  bool w_conj = true;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      w_conj = w_conj && H.compose(H.compose(W, H.tau(a, b)), W) == H.tau(-std::int64_t(a), -std::int64_t(b));
  add("W tau_{a,b} W = tau_{-a,-b}", w_conj);

  add("V T_2 = T_2 V", detail::product_set(H, {V}, T2) == detail::product_set(H, T2, {V}));
  add("WV = VW", H.compose(W, V) == H.compose(V, W));

  // <tau_{1,1}, V, W> = D_p x <V>.
  const auto K = H.closure({t11, V, W});
  const auto D = H.closure({t11, W});
  rep.subgroup_order = K.size();
  const bool dihedral = H.element_order(t11) == p && H.element_order(W) == 2 &&
                        H.compose(H.compose(W, t11), W) == H.inverse(t11) && H.compose(W, t11) != H.compose(t11, W);
  add("<tau_{1,1}, W> is dihedral of order 2p", D.size() == 2ull * p && dihedral);
  bool central = true;
  for (const auto& k : K) central = central && H.compose(k, V) == H.compose(V, k);
  const bool v_outside = !std::binary_search(D.begin(), D.end(), V);
  add("<tau_{1,1}, V, W> = D_p x <V>", K.size() == 4ull * p && central && v_outside && H.element_order(V) == 2);
  add("tau_{1,-1} not in <tau_{1,1}, V, W>", !std::binary_search(K.begin(), K.end(), H.tau(1, -1)));
  return rep;
}

struct DihedralNormalForm {
  Mat2 conjugator;   // C with C R C^-1 = normal_u and C S C^-1 = normal_v
  Mat2 normal_u;     // diag(l, l^-1)
  Mat2 normal_v;     // antidiag(1, 1)
  Mat2 rotation;     // R, the generator of the rotation subgroup that was used
  Mat2 reflection;   // S, the reflection that was used
  std::uint32_t rotation_exponent = 0;  // R = U^j, or 0 when R came from a search
  bool reflection_replaced = false;     // S != V
};

/// Conjugates the dihedral group <U, V> of order 2(p-1) into the canonical
/// pair diag(l, l^-1), antidiag(1, 1). The generators may be replaced by
/// other generators of the same group (a power of U coprime to p-1, and
/// U^((p-1)/2) V for V) as needed.
inline DihedralNormalForm dihedral_normal_form(const Mat2& U, const Mat2& V) {
  const std::uint32_t p = U.p;
  if (V.p != p) throw domain_error("matrices over different primes");
  if (p < 3 || !detail::is_prime(p)) throw domain_error("p must be an odd prime");
  if (!U.invertible() || !V.invertible()) throw domain_error("generators must be invertible");
  const Mat2 I = Mat2::identity(p);
  if (U.pow(p - 1) != I || order(U) != p - 1) throw domain_error("U must have order p-1");
  if (V * V != I) throw domain_error("V must satisfy V^2 = I");
  if (V * U * V != U.inverse()) throw domain_error("VUV must equal U^-1");
  const auto group = generated_group({U, V});
  if (group.size() != 2ull * (p - 1)) throw domain_error("<U, V> does not have order 2(p-1)");

  const Field fp = make_field(p, 1);
  const std::uint32_t l = primitive_element(fp).to_uint();
  const std::uint32_t li = detail::mod_inv(l, p);
  const Mat2 U0 = Mat2::diag(p, l, li);
  const Mat2 V0 = Mat2::antidiag(p, 1, 1);
  const std::uint32_t target_trace = (l + li) % p;

  auto has_target_eigenvalues = [&](const Mat2& m) { return m.det() == 1 && m.trace() == target_trace; };
  auto rotation_ok = [&](const Mat2& r) { return order(r) == p - 1 && has_target_eigenvalues(r); };

  DihedralNormalForm out;
  // Rotation: a power of U coprime to p-1 first, then any element of the group.
  bool found = false;
  for (std::uint32_t j = 1; j < p - 1; ++j) {
    if (std::gcd(j, p - 1) != 1) continue;
    const Mat2 r = U.pow(j);
    if (rotation_ok(r)) {
      out.rotation = r;
      out.rotation_exponent = j;
      found = true;
      break;
    }
  }
  if (!found) {
    for (const auto& r : group) {
      if (rotation_ok(r)) {
        out.rotation = r;
        found = true;
        break;
      }
    }
  }
  if (!found) throw domain_error("no rotation with eigenvalues {l, l^-1} in <U, V>");

  const Mat2 R = out.rotation;
  const auto cyclic = generated_group({R});
  auto reflection_ok = [&](const Mat2& s) {
    return s * s == I && s * R * s == R.inverse() && !std::binary_search(cyclic.begin(), cyclic.end(), s);
  };
  const Mat2 WV = R.pow((p - 1) / 2) * V;
  if (reflection_ok(V)) {
    out.reflection = V;
  } else if (reflection_ok(WV)) {
    out.reflection = WV;
    out.reflection_replaced = true;
  } else {
    found = false;
    for (const auto& s : group) {
      if (reflection_ok(s)) {
        out.reflection = s;
        out.reflection_replaced = true;
        found = true;
        break;
      }
    }
    if (!found) throw domain_error("no reflection inverting the rotation in <U, V>");
  }
  const Mat2 S = out.reflection;

  // Basis {e1, S e1} with e1 an l-eigenvector of R.
  std::vector<std::array<std::uint32_t, 2>> candidates;
  const Mat2 shifted = Mat2::make(p, std::int64_t(R.e[0]) - l, R.e[1], R.e[2], std::int64_t(R.e[3]) - l);
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      const auto z = shifted.apply({x, y});
      if (z[0] == 0 && z[1] == 0) candidates.push_back({x, y});
    }
  for (const auto& e1 : candidates) {
    const auto e2 = S.apply(e1);
    const Mat2 B = Mat2::make(p, e1[0], e2[0], e1[1], e2[1]);
    if (!B.invertible()) continue;
    out.conjugator = B.inverse();
    out.normal_u = out.conjugator * R * B;
    out.normal_v = out.conjugator * S * B;
    if (out.normal_u != U0 || out.normal_v != V0)
      throw invariant_violation("dihedral normal form did not reach the canonical pair");
    return out;
  }
  throw invariant_violation("no eigenvector e1 with {e1, S e1} a basis");
}

}  // namespace amlab

#endif  // AMLAB_GRP_HPP
