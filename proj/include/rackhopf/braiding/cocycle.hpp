#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/exact/cyclotomic.hpp"
#include "rackhopf/rack/rack.hpp"

namespace rackhopf {

/// q(x,y) = z_N^exp[x][y]; exponents are kept reduced mod N.
class Cocycle {
 public:
  Cocycle(unsigned order, std::vector<std::vector<std::int64_t>> exponents) : order_(order) {
    if (order == 0) throw ValidationError("cocycle root order must be positive");
    n_ = exponents.size();
    exp_.resize(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
      if (exponents[x].size() != n_) throw ValidationError("cocycle exponent table is not square");
      for (std::size_t y = 0; y < n_; ++y) {
        exp_[x * n_ + y] = static_cast<std::uint32_t>(detail::mod_floor(exponents[x][y], order));
      }
    }
  }

  static Cocycle constant(std::size_t n, unsigned order, std::int64_t k) {
    return Cocycle(order, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, k)));
  }

  std::size_t size() const { return n_; }
  unsigned order() const { return order_; }
  std::uint32_t exponent(std::size_t x, std::size_t y) const { return exp_[x * n_ + y]; }
  CycScalar value(std::size_t x, std::size_t y) const {
    return CycScalar::root_of_unity(order_, exponent(x, y));
  }

  /// The same values expressed over z_M, M a multiple of order().
  Cocycle lifted(unsigned new_order) const {
    if (new_order % order_ != 0) throw ValidationError("cocycle order does not divide target order");
    std::vector<std::vector<std::int64_t>> t(n_, std::vector<std::int64_t>(n_));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) t[x][y] = static_cast<std::int64_t>(exponent(x, y)) * (new_order / order_);
    }
    return Cocycle(new_order, std::move(t));
  }

  std::vector<std::vector<std::int64_t>> exponents() const {
    std::vector<std::vector<std::int64_t>> t(n_, std::vector<std::int64_t>(n_));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) t[x][y] = exponent(x, y);
    }
    return t;
  }

  friend bool operator==(Cocycle const&, Cocycle const&) = default;

 private:
  std::size_t n_ = 0;
  unsigned order_ = 1;
  std::vector<std::uint32_t> exp_;
};

/// A basis tensor v_{w_1} (x) ... (x) v_{w_n} times z_N^exponent.
struct Monomial {
  std::vector<std::uint32_t> word;
  std::uint32_t exponent = 0;
  friend bool operator==(Monomial const&, Monomial const&) = default;
};

/// c(v_x (x) v_y) = q(x,y) v_{x|>y} (x) v_x, acting on slots (i, i+1).
inline void apply_braiding(Rack const& r, Cocycle const& q, Monomial& m, std::size_t i) {
  std::uint32_t a = m.word[i], b = m.word[i + 1];
  m.exponent = (m.exponent + q.exponent(a, b)) % q.order();
  m.word[i] = r.op(a, b);
  m.word[i + 1] = a;
}

struct BraidCheck {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;  // first failing basis triple
};

/// Checks (c(x)1)(1(x)c)(c(x)1) = (1(x)c)(c(x)1)(1(x)c) on every basis triple.
inline BraidCheck braid_check(Rack const& r, Cocycle const& q) {
  if (q.size() != r.size()) throw ValidationError("cocycle size does not match rack size");
  std::size_t d = r.size();
  for (std::uint32_t x = 0; x < d; ++x) {
    for (std::uint32_t y = 0; y < d; ++y) {
      for (std::uint32_t z = 0; z < d; ++z) {
        Monomial lhs{{x, y, z}, 0}, rhs{{x, y, z}, 0};
        apply_braiding(r, q, lhs, 0);
        apply_braiding(r, q, lhs, 1);
        apply_braiding(r, q, lhs, 0);
        apply_braiding(r, q, rhs, 1);
        apply_braiding(r, q, rhs, 0);
        apply_braiding(r, q, rhs, 1);
        if (!(lhs == rhs)) return {false, std::array<std::size_t, 3>{x, y, z}};
      }
    }
  }
  return {};
}

class BraidingInvalid : public ValidationError {
 public:
  explicit BraidingInvalid(std::array<std::size_t, 3> w)
      : ValidationError("braid equation fails on basis triple (" + std::to_string(w[0] + 1) + "," +
                        std::to_string(w[1] + 1) + "," + std::to_string(w[2] + 1) + ")"),
        witness(w) {}
  std::array<std::size_t, 3> witness;
};

/// V = (kX, c^q) with the braid equation verified.
class BraidedSpace {
 public:
  BraidedSpace(Rack rack, Cocycle cocycle) : rack_(std::move(rack)), cocycle_(std::move(cocycle)) {
    auto check = braid_check(rack_, cocycle_);
    if (!check.ok) throw BraidingInvalid(*check.witness);
  }

  Rack const& rack() const { return rack_; }
  Cocycle const& cocycle() const { return cocycle_; }
  std::size_t dimension() const { return rack_.size(); }
  unsigned order() const { return cocycle_.order(); }

  void apply(Monomial& m, std::size_t i) const { apply_braiding(rack_, cocycle_, m, i); }

 private:
  Rack rack_;
  Cocycle cocycle_;
};

namespace cocycles {

/// Constant cocycle with value -1.
inline Cocycle minus_one(std::size_t n) { return Cocycle::constant(n, 2, 1); }

/// Sign cocycle on a rack of transpositions: for y = (k l), k < l,
/// chi(x, y) = +1 if x(k) < x(l) and -1 otherwise.
inline Cocycle chi(Rack const& r) {
  auto const& emb = r.embedding();
  if (!emb) throw ValidationError("chi cocycle needs a rack of transpositions");
  std::size_t n = r.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> moved(n);
  for (std::size_t y = 0; y < n; ++y) {
    Perm const& p = (*emb)[y];
    std::vector<std::uint32_t> pts;
    for (std::uint32_t i = 0; i < p.size(); ++i) {
      if (p[i] != i) pts.push_back(i);
    }
    if (pts.size() != 2) throw ValidationError("chi cocycle needs a rack of transpositions");
    moved[y] = {pts[0], pts[1]};
  }
  std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    Perm const& px = (*emb)[x];
    for (std::size_t y = 0; y < n; ++y) {
      auto [k, l] = moved[y];
      e[x][y] = px[k] < px[l] ? 0 : 1;
    }
  }
  return Cocycle(2, std::move(e));
}

}  // namespace cocycles
}  // namespace rackhopf
