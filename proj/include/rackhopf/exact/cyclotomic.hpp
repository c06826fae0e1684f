#pragma once

// Exact arithmetic in the cyclotomic fields Q(z_N) = Q[x]/(Phi_N(x)).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rackhopf/errors.hpp"

namespace rackhopf {

using Rational = mpq_class;

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Integer coefficients of Phi_n, lowest degree first. Cached; thread safe.
inline std::vector<std::int64_t> const& cyclotomic_polynomial(unsigned n) {
  static std::mutex mtx;
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n == 0) throw ValidationError("cyclotomic order must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto const& den = cyclotomic_polynomial(d);
    std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      std::int64_t c = num[i];  // den is monic
      quot[i - dd] = c;
      if (c != 0) {
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      }
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(n, std::move(num)).first->second;
}

using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduce p modulo the monic integer polynomial `mod` in place; result has
// exactly deg(mod) coefficients.
inline void reduce_mod(QPoly& p, std::vector<std::int64_t> const& mod) {
  std::size_t deg = mod.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (mod[j] != 0) p[i - deg + j] -= c * mod[j];
    }
    p[i] = 0;
  }
  p.resize(deg);
}

// Quotient and remainder of a / b over Q; b nonzero and trimmed.
inline std::pair<QPoly, QPoly> divmod(QPoly a, QPoly const& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  Rational lead = b.back();
  for (std::size_t i = a.size(); i-- > b.size() - 1;) {
    Rational c = a[i] / lead;
    q[i - (b.size() - 1)] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[i - (b.size() - 1) + j] -= c * b[j];
      }
    }
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

inline QPoly poly_mul(QPoly const& a, QPoly const& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

inline QPoly poly_sub(QPoly a, QPoly const& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace detail

/// An element of Q(z_N), stored as coefficients of 1, z, ..., z^(phi(N)-1).
///
/// Operands of different orders are lifted to the lcm of their orders. All
/// values are immutable once built.
class CycScalar {
 public:
  CycScalar() : order_(1), coeffs_(1) {}

  CycScalar(Rational r, unsigned order = 1)  // NOLINT(runtime/explicit)
      : order_(order), coeffs_(detail::euler_phi(order)) {
    coeffs_[0] = std::move(r);
  }

  CycScalar(long v) : CycScalar(Rational(v)) {}  // NOLINT(runtime/explicit)
  CycScalar(int v) : CycScalar(Rational(v)) {}   // NOLINT(runtime/explicit)

  static CycScalar zero(unsigned order = 1) { return CycScalar(0, order); }
  static CycScalar one(unsigned order = 1) { return CycScalar(1, order); }

  /// z_N^k.
  static CycScalar root_of_unity(unsigned order, std::int64_t k) {
    auto e = static_cast<std::size_t>(detail::mod_floor(k, order));
    detail::QPoly p(e + 1);
    p[e] = 1;
    return from_poly(order, std::move(p));
  }

  /// sum_e counts[e] * z_N^e for e in [0, N).
  static CycScalar from_exponent_counts(unsigned order,
                                        std::span<std::int64_t const> counts) {
    detail::QPoly p(order);
    for (std::size_t e = 0; e < counts.size(); ++e) {
      if (counts[e] != 0) p[e % order] += static_cast<long>(counts[e]);
    }
    return from_poly(order, std::move(p));
  }

  /// Reduces an arbitrary polynomial in z_N.
  static CycScalar from_poly(unsigned order, detail::QPoly p) {
    CycScalar r;
    r.order_ = order;
    auto const& mod = detail::cyclotomic_polynomial(order);
    if (p.size() < mod.size() - 1) p.resize(mod.size() - 1);
    detail::reduce_mod(p, mod);
    r.coeffs_ = std::move(p);
    return r;
  }

  unsigned order() const { return order_; }
  std::vector<Rational> const& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (auto const& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return false;
    }
    return true;
  }

  /// Image in Q(z_M) for M a multiple of order().
  CycScalar lifted(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) {
      throw ValidationError("cannot lift order " + std::to_string(order_) +
                            " to " + std::to_string(new_order));
    }
    unsigned step = new_order / order_;
    detail::QPoly p(coeffs_.size() == 0 ? 1 : (coeffs_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    return from_poly(new_order, std::move(p));
  }

  CycScalar operator-() const {
    CycScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycScalar operator+(CycScalar const& a, CycScalar const& b) {
    if (a.order_ != b.order_) {
      unsigned l = std::lcm(a.order_, b.order_);
      return a.lifted(l) + b.lifted(l);
    }
    CycScalar r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  friend CycScalar operator-(CycScalar const& a, CycScalar const& b) {
    return a + (-b);
  }

  friend CycScalar operator*(CycScalar const& a, CycScalar const& b) {
    if (a.order_ != b.order_) {
      unsigned l = std::lcm(a.order_, b.order_);
      return a.lifted(l) * b.lifted(l);
    }
    if (a.coeffs_.size() == 1) {
      CycScalar r = a;
      r.coeffs_[0] *= b.coeffs_[0];
      return r;
    }
    return from_poly(a.order_, detail::poly_mul(a.coeffs_, b.coeffs_));
  }

  friend CycScalar operator/(CycScalar const& a, CycScalar const& b) {
    return a * b.inverse();
  }

  CycScalar& operator+=(CycScalar const& b) { return *this = *this + b; }
  CycScalar& operator-=(CycScalar const& b) { return *this = *this - b; }
  CycScalar& operator*=(CycScalar const& b) { return *this = *this * b; }

  /// Multiplicative inverse by the extended Euclidean algorithm modulo Phi_N.
  CycScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (coeffs_.size() == 1) return CycScalar(1 / coeffs_[0], order_);
    auto const& mod = detail::cyclotomic_polynomial(order_);
    detail::QPoly r0(mod.begin(), mod.end());
    detail::QPoly r1 = coeffs_;
    detail::trim(r1);
    detail::QPoly t0, t1{Rational(1)};
    while (!(r1.size() == 1)) {
      auto [q, r] = detail::divmod(r0, r1);
      auto t = detail::poly_sub(t0, detail::poly_mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      t0 = std::move(t1);
      t1 = std::move(t);
      if (r1.empty()) throw InvariantViolation("cyclotomic polynomial is reducible");
    }
    Rational c = r1[0];
    for (auto& v : t1) v /= c;
    return from_poly(order_, std::move(t1));
  }

  CycScalar pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar result = one(order_);
    CycScalar base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(CycScalar const& a, CycScalar const& b) {
    if (a.order_ != b.order_) {
      unsigned l = std::lcm(a.order_, b.order_);
      return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
    }
    return a.coeffs_ == b.coeffs_;
  }

  friend bool operator!=(CycScalar const& a, CycScalar const& b) { return !(a == b); }

  /// e.g. "1/2 - z5 + 3*z5^3"; "0" for zero.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      Rational const& c = coeffs_[i];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, CycScalar const& a) {
  return os << a.to_string();
}

}  // namespace rackhopf
