#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/group/presentation.hpp"

namespace rackhopf {

class LimitExceeded : public BoundExceeded {
 public:
  LimitExceeded(std::size_t max_cosets, std::size_t defined)
      : BoundExceeded("coset enumeration exceeded " + std::to_string(max_cosets) + " cosets (" +
                      std::to_string(defined) + " defined)"),
        max_cosets(max_cosets),
        defined(defined) {}
  std::size_t max_cosets;
  std::size_t defined;
};

struct CosetResult {
  std::size_t index = 0;        // number of cosets of the subgroup
  std::size_t defined = 0;      // total cosets ever defined
  std::vector<std::vector<std::size_t>> table;  // compacted: table[c][2g] = c.x_g, table[c][2g+1] = c.x_g^-1
};

namespace detail {

class CosetTable {
 public:
  static constexpr std::size_t none = SIZE_MAX;

  CosetTable(std::size_t generators, std::size_t max_cosets) : cols_(2 * generators), max_(max_cosets) {
    add_row();
  }

  static std::size_t column(int letter) {
    return 2 * (static_cast<std::size_t>(std::abs(letter)) - 1) + (letter < 0 ? 1 : 0);
  }
  static std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

  bool alive(std::size_t c) const { return parent_[c] == c; }
  std::size_t rows() const { return table_.size(); }
  std::size_t active() const { return active_; }
  std::size_t at(std::size_t c, std::size_t col) const { return table_[c][col]; }

  void define(std::size_t c, std::size_t col) {
    if (active_ >= max_) throw LimitExceeded(max_, table_.size());
    std::size_t d = add_row();
    table_[c][col] = d;
    table_[d][inverse_column(col)] = c;
  }

  /// HLT scan of w from coset c, defining cosets as needed.
  void scan_and_fill(std::size_t c, FreeWord const& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    auto fwd = [&](std::ptrdiff_t k) { return column(w[static_cast<std::size_t>(k)]); };
    for (;;) {
      while (i <= j && table_[f][fwd(i)] != none) f = table_[f][fwd(i++)];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inverse_column(fwd(j))] != none) b = table_[b][inverse_column(fwd(j--))];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][fwd(i)] = b;
        table_[b][inverse_column(fwd(i))] = f;
        return;
      }
      define(f, fwd(i));
    }
  }

  std::size_t find(std::size_t c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t f = table_[e][col];
        if (f == none) continue;
        if (table_[f][inverse_column(col)] == e) table_[f][inverse_column(col)] = none;
        std::size_t e1 = find(e), f1 = find(f);
        if (table_[e1][col] != none) {
          merge(f1, table_[e1][col], queue);
        } else if (table_[f1][inverse_column(col)] != none) {
          merge(e1, table_[f1][inverse_column(col)], queue);
        } else {
          table_[e1][col] = f1;
          table_[f1][inverse_column(col)] = e1;
        }
      }
    }
  }

 private:
  std::size_t add_row() {
    table_.emplace_back(cols_, none);
    parent_.push_back(parent_.size());
    ++active_;
    return table_.size() - 1;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --active_;
    queue.push_back(b);
  }

  std::size_t cols_;
  std::size_t max_;
  std::size_t active_ = 0;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Index of <subgroup_generators> in <p | extra_relators>, by HLT coset
/// enumeration with deterministic coset order. Throws LimitExceeded when more
/// than max_cosets cosets would be live at once.
inline CosetResult todd_coxeter(Presentation const& p, std::vector<FreeWord> const& extra_relators,
                                std::vector<FreeWord> const& subgroup_generators, std::size_t max_cosets) {
  if (max_cosets == 0) throw ValidationError("max_cosets must be positive");
  std::vector<FreeWord> rels;
  for (auto const& r : p.relators()) rels.push_back(r);
  for (auto const& r : extra_relators) {
    for (int l : r) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > p.generators()) throw ValidationError("relator letter out of range");
    }
    FreeWord w = words::free_reduce(r);
    if (!w.empty()) rels.push_back(std::move(w));
  }
  std::size_t cols = 2 * p.generators();
  detail::CosetTable t(p.generators(), max_cosets);
  for (auto const& w : subgroup_generators) {
    t.scan_and_fill(0, words::free_reduce(w));
  }
  for (std::size_t c = 0; c < t.rows(); ++c) {
    for (auto const& r : rels) {
      if (!t.alive(c)) break;
      t.scan_and_fill(c, r);
    }
    if (!t.alive(c)) continue;
    for (std::size_t col = 0; col < cols; ++col) {
      if (!t.alive(c)) break;
      if (t.at(c, col) == detail::CosetTable::none) t.define(c, col);
    }
  }
  CosetResult res;
  res.index = t.active();
  res.defined = t.rows();
  std::vector<std::size_t> number(t.rows(), SIZE_MAX);
  std::size_t k = 0;
  for (std::size_t c = 0; c < t.rows(); ++c) {
    if (t.alive(c)) number[c] = k++;
  }
  for (std::size_t c = 0; c < t.rows(); ++c) {
    if (!t.alive(c)) continue;
    std::vector<std::size_t> row(cols);
    for (std::size_t col = 0; col < cols; ++col) row[col] = number[t.find(t.at(c, col))];
    res.table.push_back(std::move(row));
  }
  return res;
}

}  // namespace rackhopf
