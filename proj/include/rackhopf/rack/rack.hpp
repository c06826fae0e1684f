#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/rack/finite_group.hpp"
#include "rackhopf/rack/perm.hpp"

namespace rackhopf {

class NotBijective : public ValidationError {
 public:
  explicit NotBijective(std::size_t x)
      : ValidationError("left translation of element " + std::to_string(x + 1) + " is not bijective"), x(x) {}
  std::size_t x;
};

class NotSelfDistributive : public ValidationError {
 public:
  NotSelfDistributive(std::size_t x, std::size_t y, std::size_t z)
      : ValidationError("self-distributivity fails at (x,y,z) = (" + std::to_string(x + 1) + "," +
                        std::to_string(y + 1) + "," + std::to_string(z + 1) + ")"),
        x(x), y(y), z(z) {}
  std::size_t x, y, z;
};

/// A finite rack given by its table: op(x, y) = x |> y, 0-based.
class Rack {
 public:
  /// Validates both rack axioms; throws NotBijective or NotSelfDistributive
  /// with the first witness found.
  static Rack verify(std::vector<std::vector<std::uint32_t>> table, std::string label = {}) {
    std::size_t n = table.size();
    if (n == 0) throw ValidationError("rack must be nonempty");
    for (std::size_t x = 0; x < n; ++x) {
      if (table[x].size() != n) throw ValidationError("rack table is not square");
      for (auto v : table[x]) {
        if (v >= n) throw ValidationError("rack table entry out of range in row " + std::to_string(x + 1));
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!perm::is_permutation(table[x])) throw NotBijective(x);
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (table[x][table[y][z]] != table[table[x][y]][table[x][z]]) {
            throw NotSelfDistributive(x, y, z);
          }
        }
      }
    }
    Rack r;
    r.n_ = n;
    r.table_ = std::move(table);
    r.label_ = std::move(label);
    return r;
  }

  /// Conjugation rack x |> y = x y x^-1 on a list of permutations closed
  /// under conjugation by its members.
  static Rack conjugation(std::vector<Perm> elements, std::string label = {}) {
    std::size_t n = elements.size();
    std::unordered_map<Perm, std::size_t, PermHash> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);
    if (index.size() != n) throw ValidationError("repeated element in conjugation rack");
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto it = index.find(perm::conjugate(elements[x], elements[y]));
        if (it == index.end()) throw ValidationError("element list is not closed under conjugation");
        table[x][y] = static_cast<std::uint32_t>(it->second);
      }
    }
    Rack r = verify(std::move(table), std::move(label));
    r.embedding_ = std::move(elements);
    return r;
  }

  std::size_t size() const { return n_; }
  std::uint32_t op(std::size_t x, std::size_t y) const { return table_[x][y]; }
  std::vector<std::vector<std::uint32_t>> const& table() const { return table_; }
  std::string const& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Permutations realizing a conjugation rack, when known.
  std::optional<std::vector<Perm>> const& embedding() const { return embedding_; }

  /// phi_x : y -> x |> y.
  Perm translation(std::size_t x) const { return Perm(table_[x].begin(), table_[x].end()); }

  bool is_quandle() const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (table_[x][x] != x) return false;
    }
    return true;
  }

  /// Relabeled copy: element x becomes sigma(x).
  Rack relabeled(Perm const& sigma) const {
    std::vector<std::vector<std::uint32_t>> t(n_, std::vector<std::uint32_t>(n_));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) t[sigma[x]][sigma[y]] = sigma[table_[x][y]];
    }
    return verify(std::move(t), label_);
  }

  friend bool operator==(Rack const& a, Rack const& b) { return a.table_ == b.table_; }

 private:
  Rack() = default;

  std::size_t n_ = 0;
  std::vector<std::vector<std::uint32_t>> table_;
  std::string label_;
  std::optional<std::vector<Perm>> embedding_;
};

/// Orbits of the group generated by all left translations, each block sorted,
/// blocks ordered by least element.
inline std::vector<std::vector<std::size_t>> rack_orbits(Rack const& r) {
  std::size_t n = r.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a = find(y), b = find(r.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t y = 0; y < n; ++y) {
    std::size_t root = find(y);
    if (block_of[root] == n) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(y);
  }
  return blocks;
}

inline bool is_indecomposable(Rack const& r) { return rack_orbits(r).size() == 1; }

/// x -> phi_x is injective.
inline bool is_faithful(Rack const& r) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = x + 1; y < r.size(); ++y) {
      if (r.table()[x] == r.table()[y]) return false;
    }
  }
  return true;
}

/// Inn(X): the subgroup of Sym(X) generated by the left translations.
/// Generator i of the result is phi_i.
inline FiniteGroup inner_group(Rack const& r, std::size_t bound = FiniteGroup::default_bound) {
  std::vector<Perm> gens;
  for (std::size_t x = 0; x < r.size(); ++x) gens.push_back(r.translation(x));
  return FiniteGroup::from_generators(r.size(), std::move(gens), bound);
}

struct InnerGroupReport {
  FiniteGroup group;
  group::Fingerprint fingerprint;
  bool faithful = false;
  bool center_trivial = false;
  // Inn(X) is certified as G_X / Z(G_X) only for faithful racks whose inner
  // group has trivial center.
  bool quotient_certified = false;
};

inline InnerGroupReport inner_group_report(Rack const& r, std::size_t bound = FiniteGroup::default_bound) {
  InnerGroupReport rep;
  rep.group = inner_group(r, bound);
  rep.fingerprint = group::fingerprint(rep.group);
  rep.faithful = is_faithful(r);
  rep.center_trivial = rep.fingerprint.center_order == 1;
  rep.quotient_certified = rep.faithful && rep.center_trivial;
  return rep;
}

}  // namespace rackhopf
