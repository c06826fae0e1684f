#pragma once

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "rackhopf/errors.hpp"

namespace rackhopf {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::vector<std::vector<std::int64_t>> const& rows,
                             std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ValidationError("ragged integer matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("integer overflow in Smith normal form");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BoundExceeded("integer overflow in Smith normal form");
  return r;
}

}  // namespace detail

inline IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols_ != b.rows_) throw ValidationError("dimension mismatch in integer product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::int64_t v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c(i, j) = detail::checked_add(c(i, j), detail::checked_mul(v, b(k, j)));
      }
    }
  }
  return c;
}

struct SmithForm {
  std::vector<std::int64_t> factors;  // nonzero diagonal d_1 | d_2 | ... | d_r, all positive
  std::size_t free_rank = 0;          // cols - r
  IntMatrix left;                     // U, unimodular, rows x rows
  IntMatrix right;                    // V, unimodular, cols x cols
  IntMatrix diagonal;                 // D = U * M * V

  /// Invariant factors greater than one.
  std::vector<std::int64_t> torsion() const {
    std::vector<std::int64_t> t;
    for (auto d : factors) {
      if (d > 1) t.push_back(d);
    }
    return t;
  }
};

/// Smith normal form with divisibility-normalized diagonal.
inline SmithForm smith_normal_form(IntMatrix const& m) {
  using detail::checked_add;
  using detail::checked_mul;
  std::size_t rows = m.rows();
  std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t f) {  // row dst += f*row src
    for (std::size_t j = 0; j < cols; ++j) a(dst, j) = checked_add(a(dst, j), checked_mul(f, a(src, j)));
    for (std::size_t j = 0; j < rows; ++j) u(dst, j) = checked_add(u(dst, j), checked_mul(f, u(src, j)));
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t i = 0; i < rows; ++i) a(i, dst) = checked_add(a(i, dst), checked_mul(f, a(i, src)));
    for (std::size_t i = 0; i < cols; ++i) v(i, dst) = checked_add(v(i, dst), checked_mul(f, v(i, src)));
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u(x, j), u(y, j));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, x), v(i, y));
  };
  auto negate_row = [&](std::size_t x) {
    for (std::size_t j = 0; j < cols; ++j) a(x, j) = -a(x, j);
    for (std::size_t j = 0; j < rows; ++j) u(x, j) = -u(x, j);
  };

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) != 0 && (pi == rows || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) goto done;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) != 0) {
          add_row(i, t, -(a(i, t) / a(t, t)));
          if (a(i, t) != 0) clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) != 0) {
          add_col(j, t, -(a(t, j) / a(t, t)));
          if (a(t, j) != 0) clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) < 0) negate_row(t);
  }
done:
  SmithForm out;
  for (std::size_t i = 0; i < rows && i < cols; ++i) {
    if (a(i, i) != 0) out.factors.push_back(a(i, i));
  }
  out.free_rank = cols - out.factors.size();
  out.left = std::move(u);
  out.right = std::move(v);
  out.diagonal = std::move(a);
  return out;
}

}  // namespace rackhopf
