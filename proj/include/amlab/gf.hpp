#ifndef AMLAB_GF_HPP
#define AMLAB_GF_HPP

// Exact arithmetic in F_p and F_{p^k}.
//
// A Field is a cheap handle to an interned, immutable description of
// F_p[t]/(m(t)), where m is the lexicographically least monic irreducible
// of degree k (constant coefficient most significant). Elements carry their
// field; mixing fields throws field_mismatch.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amlab/error.hpp"

namespace amlab {

inline constexpr std::size_t kMaxExtensionDegree = 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw domain_error("inverse of zero");
  return mod_pow(a, p - 2, p);
}

// Dense polynomials over F_p, little-endian, used only for modulus search.
namespace upoly {

using Vec = std::vector<std::uint32_t>;

inline void trim(Vec& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Vec rem(Vec f, const Vec& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t inv = mod_inv(g.back(), p);
  while (f.size() > dg) {
    const std::uint64_t q = f.back() * inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - q) * g[i]) % p);
    trim(f);
  }
  return f;
}

inline Vec mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return rem(std::move(r), m, p);
}

inline Vec powmod(Vec base, std::uint64_t e, const Vec& m, std::uint32_t p) {
  Vec r = rem(Vec{1}, m, p);
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline Vec gcd(Vec a, Vec b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Vec sub(Vec a, const Vec& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Rabin's test for a monic f of degree k.
inline bool is_irreducible(const Vec& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  const Vec x{0, 1};
  // x^(p^i) mod f for i = 0..k
  std::vector<Vec> frob{rem(x, f, p)};
  for (std::size_t i = 1; i <= k; ++i) frob.push_back(powmod(frob.back(), p, f, p));
  if (sub(frob[k], rem(x, f, p), p) != Vec{}) return false;
  for (std::size_t r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(r)) continue;
    Vec g = gcd(f, sub(frob[k / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace upoly

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint64_t order = 0;
  std::vector<std::uint32_t> modulus;  // k+1 entries, monic
  const FieldData* prime = nullptr;     // the prime subfield (self when k == 1)
};

inline std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  // Candidates with c0 = 0 are reducible; start at c0 = 1.
  for (std::uint64_t n = count / p; n < count; ++n) {
    std::vector<std::uint32_t> f(k + 1, 0);
    std::uint64_t m = n;
    for (std::uint32_t i = k; i-- > 0;) {  // c0 is the most significant digit
      f[i] = static_cast<std::uint32_t>(m % p);
      m /= p;
    }
    f[k] = 1;
    if (upoly::is_irreducible(f, p)) return f;
  }
  throw domain_error("no irreducible polynomial found");  // unreachable
}

inline const FieldData* intern_field(std::uint32_t p, std::uint32_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldData>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find({p, k});
  if (it != registry.end()) return it->second.get();
  auto data = std::make_unique<FieldData>();
  data->p = p;
  data->k = k;
  data->order = 1;
  for (std::uint32_t i = 0; i < k; ++i) data->order *= p;
  data->modulus = least_irreducible(p, k);
  if (k == 1) {
    data->prime = data.get();
  } else {
    auto pit = registry.find({p, 1});
    if (pit == registry.end()) {
      auto prime = std::make_unique<FieldData>();
      prime->p = p;
      prime->k = 1;
      prime->order = p;
      prime->modulus = {0, 1};
      prime->prime = prime.get();
      pit = registry.emplace(std::make_pair(p, 1u), std::move(prime)).first;
    }
    data->prime = pit->second.get();
  }
  const FieldData* out = data.get();
  registry.emplace(std::make_pair(p, k), std::move(data));
  return out;
}

}  // namespace detail

class FieldElement;

class Field {
 public:
  Field() = default;

  std::uint32_t p() const { return d_->p; }
  std::uint32_t k() const { return d_->k; }
  std::uint64_t order() const { return d_->order; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  bool is_prime_field() const { return d_->k == 1; }
  bool valid() const { return d_ != nullptr; }
  Field prime_field() const { return Field(d_->prime); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t n) const;
  /// Element with base-p digits of `index` as coefficients (little-endian).
  FieldElement element(std::uint64_t index) const;
  /// The class of t in F_p[t]/(m).
  FieldElement generator() const;
  /// Image of an element of the prime subfield (or of this field itself).
  FieldElement embed(const FieldElement& e) const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.d_ != b.d_; }

  std::string name() const {
    std::ostringstream os;
    os << "F_" << d_->p;
    if (d_->k > 1) os << "^" << d_->k;
    return os.str();
  }

 private:
  friend class FieldElement;
  friend Field make_field(std::uint32_t, std::uint32_t);
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_ = nullptr;
};

/// F_{p^k} with the deterministic modulus. Throws domain_error for even or
/// composite p and for k < 1.
inline Field make_field(std::uint32_t p, std::uint32_t k) {
  if (p == 2) throw domain_error("p must be odd");
  if (p % 2 == 0 || !detail::is_prime(p)) throw domain_error("p must be an odd prime");
  if (k < 1) throw domain_error("extension degree k must be at least 1");
  if (k > kMaxExtensionDegree) throw domain_error("extension degree too large");
  long double q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > 9.0e18L) throw domain_error("field order does not fit in 64 bits");
  return Field(detail::intern_field(p, k));
}

class FieldElement {
 public:
  FieldElement() = default;

  Field field() const { return Field(d_); }
  bool valid() const { return d_ != nullptr; }
  std::uint32_t coeff(std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (std::uint32_t i = 0; i < d_->k; ++i)
      if (c_[i]) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::uint32_t i = 1; i < d_->k; ++i)
      if (c_[i]) return false;
    return true;
  }
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const {
    for (std::uint32_t i = 1; i < d_->k; ++i)
      if (c_[i]) return false;
    return true;
  }

  std::uint64_t index() const {
    std::uint64_t r = 0;
    for (std::uint32_t i = d_->k; i-- > 0;) r = r * d_->p + c_[i];
    return r;
  }

  /// Canonical representative in [0, p-1]; only for prime-subfield values.
  std::uint32_t to_uint() const {
    if (!in_prime_field()) throw domain_error("element is not in the prime field");
    return c_[0];
  }

  FieldElement operator-() const {
    FieldElement r(d_);
    for (std::uint32_t i = 0; i < d_->k; ++i) r.c_[i] = c_[i] ? d_->p - c_[i] : 0;
    return r;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    FieldElement r(a.d_);
    const std::uint32_t p = a.d_->p;
    for (std::uint32_t i = 0; i < a.d_->k; ++i) {
      std::uint32_t s = a.c_[i] + b.c_[i];
      r.c_[i] = s >= p ? s - p : s;
    }
    return r;
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    FieldElement r(a.d_);
    const std::uint32_t p = a.d_->p;
    for (std::uint32_t i = 0; i < a.d_->k; ++i)
      r.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p - b.c_[i];
    return r;
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    const std::uint32_t p = a.d_->p;
    const std::uint32_t k = a.d_->k;
    FieldElement r(a.d_);
    if (k == 1) {
      r.c_[0] = static_cast<std::uint32_t>(std::uint64_t(a.c_[0]) * b.c_[0] % p);
      return r;
    }
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> t{};
    for (std::uint32_t i = 0; i < k; ++i) {
      if (!a.c_[i]) continue;
      for (std::uint32_t j = 0; j < k; ++j) t[i + j] = (t[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p;
    }
    const auto& m = a.d_->modulus;
    for (std::uint32_t top = 2 * k - 2; top >= k; --top) {
      const std::uint64_t q = t[top];
      if (!q) continue;
      t[top] = 0;
      for (std::uint32_t i = 0; i < k; ++i) t[top - k + i] = (t[top - k + i] + (p - q) * m[i]) % p;
    }
    for (std::uint32_t i = 0; i < k; ++i) r.c_[i] = static_cast<std::uint32_t>(t[i]);
    return r;
  }

  FieldElement pow(std::uint64_t e) const {
    FieldElement r = field().one();
    FieldElement b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  FieldElement inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    if (d_->k == 1) {
      FieldElement r(d_);
      r.c_[0] = detail::mod_inv(c_[0], d_->p);
      return r;
    }
    return pow(d_->order - 2);
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement frobenius() const { return pow(d_->p); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.d_ == b.d_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return a.index() < b.index();
  }

  std::string to_string() const {
    if (d_->k == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (std::uint32_t i = 0; i < d_->k; ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
  }

 private:
  friend class Field;
  explicit FieldElement(const detail::FieldData* d) : d_(d) {}

  void check(const FieldElement& o) const {
    if (d_ != o.d_ || d_ == nullptr) throw field_mismatch("arithmetic across different fields");
  }

  const detail::FieldData* d_ = nullptr;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
};

inline FieldElement Field::zero() const { return FieldElement(d_); }

inline FieldElement Field::one() const {
  FieldElement e(d_);
  e.c_[0] = 1;
  return e;
}

inline FieldElement Field::from_int(std::int64_t n) const {
  FieldElement e(d_);
  std::int64_t r = n % static_cast<std::int64_t>(d_->p);
  if (r < 0) r += d_->p;
  e.c_[0] = static_cast<std::uint32_t>(r);
  return e;
}

inline FieldElement Field::element(std::uint64_t index) const {
  if (index >= d_->order) throw domain_error("element index out of range");
  FieldElement e(d_);
  for (std::uint32_t i = 0; i < d_->k; ++i) {
    e.c_[i] = static_cast<std::uint32_t>(index % d_->p);
    index /= d_->p;
  }
  return e;
}

inline FieldElement Field::generator() const {
  if (d_->k == 1) throw domain_error("prime field has no polynomial generator");
  FieldElement e(d_);
  e.c_[1] = 1;
  return e;
}

inline FieldElement Field::embed(const FieldElement& e) const {
  if (e.d_ == d_) return e;
  if (e.d_ == nullptr || e.d_->p != d_->p || e.d_->k != 1)
    throw field_mismatch("can only embed elements of the prime subfield");
  FieldElement r(d_);
  r.c_[0] = e.c_[0];
  return r;
}

/// Absolute trace e + e^p + ... + e^{p^{k-1}}, as an element of F_p.
inline FieldElement trace(const FieldElement& e) {
  const Field f = e.field();
  FieldElement s = e;
  FieldElement c = e;
  for (std::uint32_t i = 1; i < f.k(); ++i) {
    c = c.frobenius();
    s += c;
  }
  return f.prime_field().from_int(s.to_uint());
}

/// Multiplicative order of a nonzero element.
inline std::uint64_t multiplicative_order(const FieldElement& e) {
  if (e.is_zero()) throw domain_error("zero has no multiplicative order");
  const std::uint64_t n = e.field().order() - 1;
  std::uint64_t ord = n;
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    while (m % q == 0) m /= q;
    while (ord % q == 0 && e.pow(ord / q).is_one()) ord /= q;
  }
  if (m > 1)
    while (ord % m == 0 && e.pow(ord / m).is_one()) ord /= m;
  return ord;
}

/// Least positive integer generating F_p^*.
inline FieldElement primitive_element(const Field& f) {
  if (!f.is_prime_field()) throw domain_error("primitive_element requires k = 1");
  for (std::uint32_t g = 1; g < f.p(); ++g) {
    FieldElement e = f.from_int(g);
    if (multiplicative_order(e) == f.p() - 1) return e;
  }
  throw domain_error("no primitive element");  // unreachable for prime p
}

}  // namespace amlab

#endif  // AMLAB_GF_HPP
