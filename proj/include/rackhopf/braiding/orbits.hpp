#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rackhopf/braiding/cocycle.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/exact/matrix.hpp"

namespace rackhopf {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

/// One orbit of c(x,y) = (x|>y, x) on X x X.
///
/// pairs[i] is the support of theta_i = c^i(v_x (x) v_y), and
/// theta_i = z_N^theta_exponents[i] * v_{pairs[i]}. c^m fixes the first pair up
/// to lambda = z_N^lambda_exponent.
struct OrbitData {
  std::vector<Pair> pairs;
  std::vector<std::uint32_t> theta_exponents;
  std::uint32_t lambda_exponent = 0;
  unsigned order = 1;
  std::size_t kernel_dim = 0;
  bool is_diagonal = false;

  std::size_t size() const { return pairs.size(); }
  CycScalar lambda() const { return CycScalar::root_of_unity(order, lambda_exponent); }
};

/// lambda == (-1)^m, decided on exponents of z_N.
inline bool lambda_is_signed_unit(std::uint32_t lambda_exponent, unsigned order, std::size_t m) {
  if (m % 2 == 0) return lambda_exponent == 0;
  return order % 2 == 0 && lambda_exponent == order / 2;
}

struct Census {
  std::vector<OrbitData> orbits;            // sorted by least pair
  std::map<std::size_t, std::size_t> histogram;  // size -> count
  std::size_t total() const { return orbits.size(); }
  std::size_t nontrivial() const {
    std::size_t k = 0;
    for (auto const& o : orbits) k += o.is_diagonal ? 0 : 1;
    return k;
  }
};

inline Census c_orbit_census(BraidedSpace const& V) {
  Rack const& r = V.rack();
  Cocycle const& q = V.cocycle();
  std::size_t d = r.size();
  std::vector<bool> seen(d * d, false);
  Census out;
  for (std::uint32_t x = 0; x < d; ++x) {
    for (std::uint32_t y = 0; y < d; ++y) {
      if (seen[x * d + y]) continue;
      OrbitData o;
      o.order = q.order();
      Pair p{x, y};
      std::uint32_t e = 0;
      do {
        seen[p.first * d + p.second] = true;
        o.pairs.push_back(p);
        o.theta_exponents.push_back(e);
        e = (e + q.exponent(p.first, p.second)) % q.order();
        p = {r.op(p.first, p.second), p.first};
      } while (p != Pair{x, y});
      o.lambda_exponent = e;
      o.is_diagonal = o.pairs.size() == 1 && x == y;
      o.kernel_dim = lambda_is_signed_unit(e, q.order(), o.pairs.size()) ? 1 : 0;
      ++out.histogram[o.pairs.size()];
      out.orbits.push_back(std::move(o));
    }
  }
  return out;
}

/// Matrix of (1+c)|_O in the theta basis: column i is theta_i + theta_{i+1},
/// column m-1 is theta_{m-1} + lambda*theta_0.
inline ExactMatrix theta_orbit_matrix(std::size_t m, CycScalar const& lambda) {
  ExactMatrix a(m, m, lambda.order());
  if (m == 1) {
    a.set(0, 0, CycScalar::one(lambda.order()) + lambda);
    return a;
  }
  for (std::size_t i = 0; i < m; ++i) a.set(i, i, CycScalar::one(lambda.order()));
  for (std::size_t i = 0; i + 1 < m; ++i) a.set(i + 1, i, CycScalar::one(lambda.order()));
  a.set(0, m - 1, lambda);
  return a;
}

/// Matrix of (1+c)|_O in the word basis v_{pairs[i]}, computed from q directly.
inline ExactMatrix word_orbit_matrix(BraidedSpace const& V, OrbitData const& o) {
  std::size_t m = o.size();
  ExactMatrix a(m, m, V.order());
  std::map<Pair, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[o.pairs[i]] = i;
  for (std::size_t i = 0; i < m; ++i) {
    Monomial mono{{o.pairs[i].first, o.pairs[i].second}, 0};
    V.apply(mono, 0);
    std::size_t j = pos.at({mono.word[0], mono.word[1]});
    a.set(i, i, a.get(i, i) + CycScalar::one(V.order()));
    a.set(j, i, a.get(j, i) + CycScalar::root_of_unity(V.order(), mono.exponent));
  }
  return a;
}

/// sum_i (-1)^i theta_i in the word basis of the orbit.
inline SparseVector alternating_theta_vector(OrbitData const& o) {
  std::vector<CycScalar> dense(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) {
    CycScalar t = CycScalar::root_of_unity(o.order, o.theta_exponents[i]);
    dense[i] = (i % 2 == 0) ? t : -t;
  }
  return SparseVector::from_dense(dense);
}

struct QuadraticAnalysis {
  Census census;
  std::size_t relations = 0;        // dim ker(1+c) = #QR
  std::size_t degree_two_dim = 0;   // d^2 - #QR
  std::size_t dimension = 0;        // d
};

/// Per-orbit kernel dimensions from the lambda criterion, each cross-checked
/// against the exact nullity of (1+c) on the orbit block.
inline QuadraticAnalysis quadratic_analysis(BraidedSpace const& V) {
  QuadraticAnalysis qa;
  qa.census = c_orbit_census(V);
  qa.dimension = V.dimension();
  for (auto const& o : qa.census.orbits) {
    std::size_t nullity = o.size() - rank(word_orbit_matrix(V, o));
    if (nullity != o.kernel_dim) {
      throw InvariantViolation("orbit kernel dimension disagrees with exact rank of 1+c");
    }
    qa.relations += o.kernel_dim;
  }
  qa.degree_two_dim = qa.dimension * qa.dimension - qa.relations;
  return qa;
}

/// Every orbit other than a singleton {(x,x)} contributes a relation.
inline bool full_quadratic_predicate(QuadraticAnalysis const& qa) {
  for (auto const& o : qa.census.orbits) {
    if (!o.is_diagonal && o.kernel_dim != 1) return false;
  }
  return true;
}

/// dim ker(1+c) >= d(d-1)/2.
inline bool many_quadratic_predicate(QuadraticAnalysis const& qa) {
  return 2 * qa.relations >= qa.dimension * (qa.dimension - 1);
}

inline bool full_quadratic_predicate(BraidedSpace const& V) {
  return full_quadratic_predicate(quadratic_analysis(V));
}
inline bool many_quadratic_predicate(BraidedSpace const& V) {
  return many_quadratic_predicate(quadratic_analysis(V));
}

/// Orbit census of the transposition rack of S_n in closed form.
struct FkCensus {
  std::int64_t size1 = 0;
  std::int64_t size2 = 0;
  std::int64_t size3 = 0;
  std::int64_t total = 0;
  std::int64_t excess = 0;  // total - C(d, 2), d = C(n, 2)
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline FkCensus fk_census_formula(std::int64_t n) {
  if (n < 3) throw ValidationError("FK census formula needs n >= 3");
  FkCensus f;
  f.size1 = binomial(n, 2);
  f.size2 = binomial(n, 2) * binomial(n - 2, 2) / 2;
  f.size3 = 2 * binomial(n, 3);
  f.total = n * (3 * n * n * n - 10 * n * n + 21 * n - 14) / 24;
  f.excess = f.total - binomial(binomial(n, 2), 2);
  if (f.total != f.size1 + f.size2 + f.size3) {
    throw InvariantViolation("FK census: closed form disagrees with the size breakdown");
  }
  return f;
}

}  // namespace rackhopf
