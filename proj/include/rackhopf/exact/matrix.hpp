#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/exact/cyclotomic.hpp"

namespace rackhopf {

/// Sorted (index, value) pairs with no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, CycScalar>;

  SparseVector() = default;

  static SparseVector from_dense(std::vector<CycScalar> const& dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (!dense[i].is_zero()) v.entries_.emplace_back(i, dense[i]);
    }
    return v;
  }

  // Entries must be sorted by index with no duplicates; zeros are dropped.
  static SparseVector from_sorted(std::vector<Entry> entries) {
    SparseVector v;
    v.entries_.reserve(entries.size());
    for (auto& e : entries) {
      if (!v.entries_.empty() && v.entries_.back().first >= e.first) {
        throw InvariantViolation("sparse entries not strictly increasing");
      }
      if (!e.second.is_zero()) v.entries_.push_back(std::move(e));
    }
    return v;
  }

  static SparseVector unit(std::size_t i, unsigned order = 1) {
    SparseVector v;
    v.entries_.emplace_back(i, CycScalar::one(order));
    return v;
  }

  std::vector<Entry> const& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  CycScalar at(std::size_t i) const {
    auto it = find(i);
    return it == entries_.end() ? CycScalar() : it->second;
  }

  bool contains(std::size_t i) const { return find(i) != entries_.end(); }

  std::size_t leading_index() const { return entries_.front().first; }

  void set(std::size_t i, CycScalar value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](Entry const& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) {
      if (value.is_zero()) {
        entries_.erase(it);
      } else {
        it->second = std::move(value);
      }
    } else if (!value.is_zero()) {
      entries_.emplace(it, i, std::move(value));
    }
  }

  /// this += factor * other.
  void axpy(CycScalar const& factor, SparseVector const& other) {
    if (factor.is_zero() || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, factor * b->second);
        ++b;
      } else {
        CycScalar s = a->second + factor * b->second;
        if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  void scale(CycScalar const& factor) {
    if (factor.is_zero()) {
      entries_.clear();
      return;
    }
    for (auto& e : entries_) e.second = e.second * factor;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    s.reserve(entries_.size());
    for (auto const& e : entries_) s.push_back(e.first);
    return s;
  }

  std::vector<CycScalar> to_dense(std::size_t dim) const {
    std::vector<CycScalar> d(dim);
    for (auto const& [i, v] : entries_) d.at(i) = v;
    return d;
  }

  friend bool operator==(SparseVector const& a, SparseVector const& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry>::const_iterator find(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](Entry const& e, std::size_t k) { return e.first < k; });
    return (it != entries_.end() && it->first == i) ? it : entries_.end();
  }

  std::vector<Entry> entries_;
};

/// Sparse row-major matrix over Q(z_N). All entries are lifted to the common
/// order given at construction.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, unsigned order = 1)
      : rows_(rows), cols_(cols), order_(order), data_(rows) {}

  static ExactMatrix from_dense(std::vector<std::vector<CycScalar>> const& dense,
                                unsigned order = 0) {
    std::size_t r = dense.size();
    std::size_t c = r == 0 ? 0 : dense[0].size();
    unsigned ord = order;
    if (ord == 0) {
      ord = 1;
      for (auto const& row : dense) {
        for (auto const& v : row) ord = std::lcm(ord, v.order());
      }
    }
    ExactMatrix m(r, c, ord);
    for (std::size_t i = 0; i < r; ++i) {
      if (dense[i].size() != c) throw ValidationError("ragged dense matrix");
      for (std::size_t j = 0; j < c; ++j) {
        if (!dense[i][j].is_zero()) m.set(i, j, dense[i][j]);
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned order() const { return order_; }

  SparseVector const& row(std::size_t i) const { return data_.at(i); }

  CycScalar get(std::size_t i, std::size_t j) const { return data_.at(i).at(j); }

  void set(std::size_t i, std::size_t j, CycScalar const& v) {
    if (i >= rows_ || j >= cols_) throw ValidationError("matrix index out of range");
    data_[i].set(j, v.is_zero() ? v : v.lifted(std::lcm(order_, v.order())));
    order_ = std::lcm(order_, v.order());
  }

  void set_row(std::size_t i, SparseVector v) {
    if (!v.empty() && v.entries().back().first >= cols_) {
      throw ValidationError("row entry out of range");
    }
    data_.at(i) = std::move(v);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (auto const& r : data_) n += r.nnz();
    return n;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_, order_);
    std::vector<std::vector<SparseVector::Entry>> cols(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (auto const& [j, v] : data_[i].entries()) cols[j].emplace_back(i, v);
    }
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j] = SparseVector::from_sorted(std::move(cols[j]));
    return t;
  }

  SparseVector apply(SparseVector const& x) const {
    std::vector<SparseVector::Entry> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      CycScalar s;
      bool any = false;
      for (auto const& [j, v] : data_[i].entries()) {
        CycScalar xj = x.at(j);
        if (xj.is_zero()) continue;
        s += v * xj;
        any = true;
      }
      if (any && !s.is_zero()) out.emplace_back(i, std::move(s));
    }
    return SparseVector::from_sorted(std::move(out));
  }

  std::vector<std::vector<CycScalar>> to_dense() const {
    std::vector<std::vector<CycScalar>> d(rows_, std::vector<CycScalar>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (auto const& [j, v] : data_[i].entries()) d[i][j] = v;
    }
    return d;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  unsigned order_;
  std::vector<SparseVector> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<SparseVector> kernel_basis;
};

namespace detail {

struct Reduced {
  std::vector<SparseVector> rows;                              // pivot rows, RREF
  std::vector<std::pair<std::size_t, std::size_t>> pivots;     // (column, row in `rows`)
};

// Gauss-Jordan elimination. Columns are visited in order of increasing
// initial nonzero count (ties by index); within a column the pivot row is the
// one with the fewest nonzeros (ties by index). Deterministic.
inline Reduced gauss_jordan(ExactMatrix const& a) {
  std::vector<SparseVector> active;
  active.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a.row(i).empty()) active.push_back(a.row(i));
  }
  std::vector<std::size_t> count(a.cols(), 0);
  for (auto const& r : active) {
    for (auto const& e : r.entries()) ++count[e.first];
  }
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return count[x] < count[y]; });

  Reduced out;
  for (std::size_t col : order) {
    if (count[col] == 0) continue;
    std::size_t best = active.size();
    for (std::size_t r = 0; r < active.size(); ++r) {
      if (active[r].contains(col) &&
          (best == active.size() || active[r].nnz() < active[best].nnz())) {
        best = r;
      }
    }
    if (best == active.size()) continue;
    SparseVector piv = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    piv.scale(piv.at(col).inverse());
    for (auto& r : active) {
      if (r.contains(col)) r.axpy(-r.at(col), piv);
    }
    for (auto& r : out.rows) {
      if (r.contains(col)) r.axpy(-r.at(col), piv);
    }
    active.erase(std::remove_if(active.begin(), active.end(),
                                [](SparseVector const& v) { return v.empty(); }),
                 active.end());
    out.pivots.emplace_back(col, out.rows.size());
    out.rows.push_back(std::move(piv));
  }
  return out;
}

}  // namespace detail

inline std::size_t rank(ExactMatrix const& a) { return detail::gauss_jordan(a).pivots.size(); }

/// Exact rank and a kernel basis (one vector per non-pivot column, with a 1
/// in that column).
inline RankKernel rank_kernel(ExactMatrix const& a) {
  auto red = detail::gauss_jordan(a);
  RankKernel out;
  out.rank = red.pivots.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto const& p : red.pivots) is_pivot[p.first] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<SparseVector::Entry> entries;
    entries.emplace_back(f, CycScalar::one(a.order()));
    for (auto const& [col, r] : red.pivots) {
      CycScalar v = red.rows[r].at(f);
      if (!v.is_zero()) entries.emplace_back(col, -v);
    }
    std::sort(entries.begin(), entries.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });
    out.kernel_basis.push_back(SparseVector::from_sorted(std::move(entries)));
  }
  return out;
}

/// Determinant by fraction-based elimination with row pivoting.
inline CycScalar determinant(ExactMatrix const& a) {
  if (a.rows() != a.cols()) throw NonSquare(a.rows(), a.cols());
  auto m = a.to_dense();
  std::size_t n = a.rows();
  CycScalar det = CycScalar::one(a.order());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return CycScalar::zero(a.order());
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    CycScalar inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      CycScalar f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) {
        if (!m[c][k].is_zero()) m[r][k] -= f * m[c][k];
      }
    }
  }
  return det;
}

/// Incrementally built reduced echelon basis of a subspace. Remembers how each
/// reduced row is expressed in the inserted (independent) vectors, so it also
/// solves for coordinates.
class EchelonBasis {
 public:
  explicit EchelonBasis(unsigned order = 1) : order_(order) {}

  std::size_t dimension() const { return rows_.size(); }
  std::vector<SparseVector> const& reduced_rows() const { return rows_; }
  std::vector<std::size_t> const& pivots() const { return pivots_; }

  /// Inserts v; returns false (and leaves the basis unchanged) if v is
  /// already in the span.
  bool insert(SparseVector const& v) {
    SparseVector r = v;
    SparseVector t = SparseVector::unit(inserted_, order_);
    reduce(r, t);
    if (r.empty()) return false;
    std::size_t col = r.leading_index();
    CycScalar inv = r.at(col).inverse();
    r.scale(inv);
    t.scale(inv);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k].contains(col)) {
        CycScalar f = -rows_[k].at(col);
        rows_[k].axpy(f, r);
        transforms_[k].axpy(f, t);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, col);
    rows_.insert(rows_.begin() + pos, std::move(r));
    transforms_.insert(transforms_.begin() + pos, std::move(t));
    ++inserted_;
    return true;
  }

  bool contains(SparseVector const& v) const {
    SparseVector r = v;
    SparseVector t;
    reduce(r, t);
    return r.empty();
  }

  /// Coordinates of y with respect to the inserted independent vectors (in
  /// insertion order), or nullopt if y is outside the span.
  std::optional<SparseVector> coordinates(SparseVector const& y) const {
    SparseVector coords;
    SparseVector r = y;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      CycScalar c = r.at(pivots_[k]);
      if (c.is_zero()) continue;
      r.axpy(-c, rows_[k]);
      coords.axpy(c, transforms_[k]);
    }
    if (!r.empty()) return std::nullopt;
    return coords;
  }

 private:
  void reduce(SparseVector& r, SparseVector& t) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      CycScalar c = r.at(pivots_[k]);
      if (c.is_zero()) continue;
      r.axpy(-c, rows_[k]);
      t.axpy(-c, transforms_[k]);
    }
  }

  unsigned order_;
  std::size_t inserted_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVector> rows_;
  std::vector<SparseVector> transforms_;
};

}  // namespace rackhopf
