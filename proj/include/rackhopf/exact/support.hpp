#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/exact/matrix.hpp"

namespace rackhopf {

struct MinimalSupport {
  std::vector<std::size_t> support;  // sorted coordinates
  SparseVector representative;       // first nonzero coordinate normalized to 1
};

struct SupportMinimalResult {
  std::vector<MinimalSupport> minimal;  // supports of size >= 2, sorted lexicographically
  std::vector<std::size_t> units;       // coordinates i with e_i in W
};

struct SupportSearchLimits {
  std::size_t max_dimension = 64;
  std::size_t max_candidates = 2'000'000;
};

namespace detail {

inline void normalize_leading(SparseVector& v) {
  if (!v.empty()) v.scale(v.entries().front().second.inverse());
}

}  // namespace detail

/// All inclusion-minimal supports of nonzero vectors of W = span(spanning).
///
/// Minimal supports are the complements of hyperplanes of the column matroid
/// of a basis matrix for W. Each hyperplane is reached by choosing dim(W)-1
/// independent coordinates on which the vector must vanish; a DFS keeps the
/// space of admissible combinations of basis rows and prunes dependent picks.
inline SupportMinimalResult support_minimal_vectors(std::vector<SparseVector> const& spanning,
                                                    std::size_t ambient_dimension,
                                                    unsigned order = 1,
                                                    SupportSearchLimits limits = {}) {
  if (ambient_dimension > limits.max_dimension) {
    throw BoundExceeded("support search: ambient dimension " + std::to_string(ambient_dimension) +
                        " exceeds bound " + std::to_string(limits.max_dimension));
  }
  EchelonBasis basis(order);
  for (auto const& v : spanning) {
    if (!v.empty() && v.entries().back().first >= ambient_dimension) {
      throw ValidationError("spanning vector exceeds ambient dimension");
    }
    basis.insert(v);
  }
  SupportMinimalResult out;
  std::size_t k = basis.dimension();
  if (k == 0) return out;
  auto const& rows = basis.reduced_rows();

  // Combinations y (sparse over k basis rows) still admissible at this depth.
  std::set<std::vector<std::size_t>> seen;
  std::size_t candidates = 0;

  auto value_at = [&](SparseVector const& y, std::size_t col) {
    CycScalar s;
    for (auto const& [r, c] : y.entries()) {
      CycScalar e = rows[r].at(col);
      if (!e.is_zero()) s += c * e;
    }
    return s;
  };

  auto emit = [&](SparseVector const& y) {
    SparseVector v;
    for (auto const& [r, c] : y.entries()) v.axpy(c, rows[r]);
    if (v.empty()) throw InvariantViolation("support search produced a zero vector");
    auto supp = v.support();
    if (!seen.insert(supp).second) return;
    detail::normalize_leading(v);
    if (supp.size() == 1) {
      out.units.push_back(supp.front());
    } else {
      out.minimal.push_back({std::move(supp), std::move(v)});
    }
  };

  // space: basis (echelon in coordinates over k rows) of admissible y.
  auto dfs = [&](auto&& self, std::vector<SparseVector> const& space, std::size_t start) -> void {
    if (++candidates > limits.max_candidates) {
      throw BoundExceeded("support search: candidate bound exceeded");
    }
    if (space.size() == 1) {
      emit(space.front());
      return;
    }
    std::size_t remaining_picks = space.size() - 1;
    for (std::size_t col = start; col + remaining_picks <= ambient_dimension; ++col) {
      std::vector<CycScalar> vals;
      vals.reserve(space.size());
      std::size_t piv = space.size();
      for (std::size_t s = 0; s < space.size(); ++s) {
        vals.push_back(value_at(space[s], col));
        if (piv == space.size() && !vals.back().is_zero()) piv = s;
      }
      if (piv == space.size()) continue;  // column already forced to zero
      std::vector<SparseVector> next;
      next.reserve(space.size() - 1);
      CycScalar inv = vals[piv].inverse();
      for (std::size_t s = 0; s < space.size(); ++s) {
        if (s == piv) continue;
        SparseVector y = space[s];
        if (!vals[s].is_zero()) y.axpy(-(vals[s] * inv), space[piv]);
        next.push_back(std::move(y));
      }
      self(self, next, col + 1);
    }
  };

  std::vector<SparseVector> initial;
  for (std::size_t r = 0; r < k; ++r) initial.push_back(SparseVector::unit(r, order));
  dfs(dfs, initial, 0);

  std::sort(out.units.begin(), out.units.end());
  std::sort(out.minimal.begin(), out.minimal.end(),
            [](MinimalSupport const& a, MinimalSupport const& b) { return a.support < b.support; });
  return out;
}

}  // namespace rackhopf
