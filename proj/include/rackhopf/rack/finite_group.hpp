#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/rack/perm.hpp"

namespace rackhopf {

/// A finite group realized as a permutation group with an explicit element
/// list. Elements are addressed by index; index order is breadth-first from
/// the identity over the generators (or file order for table groups).
class FiniteGroup {
 public:
  static constexpr std::size_t default_bound = 1'000'000;

  /// The trivial group.
  FiniteGroup() : degree_(1) {
    add_element(perm::identity(1));
    finish();
  }

  static FiniteGroup from_generators(std::size_t degree, std::vector<Perm> generators,
                                     std::size_t bound = default_bound) {
    for (auto const& g : generators) {
      if (g.size() != degree || !perm::is_permutation(g)) {
        throw ValidationError("generator is not a permutation of degree " + std::to_string(degree));
      }
    }
    FiniteGroup G(Blank{});
    G.degree_ = degree;
    G.add_element(perm::identity(degree));
    for (std::size_t i = 0; i < G.order(); ++i) {
      for (auto const& s : generators) {
        Perm p = perm::compose(s, G.element(i));
        if (!G.index_.contains(p)) {
          if (G.order() >= bound) {
            throw BoundExceeded("group order exceeds bound " + std::to_string(bound));
          }
          G.add_element(std::move(p));
        }
      }
    }
    for (auto const& s : generators) G.generators_.push_back(G.index_.at(s));
    G.finish();
    return G;
  }

  /// Group from a Cayley table (0-based entries); realized by its left
  /// regular representation, element i keeping index i.
  static FiniteGroup from_table(std::vector<std::vector<std::uint32_t>> const& table) {
    std::size_t n = table.size();
    if (n == 0) throw ValidationError("empty group table");
    for (auto const& row : table) {
      if (row.size() != n) throw ValidationError("group table is not square");
      for (auto v : row) {
        if (v >= n) throw ValidationError("group table entry out of range");
      }
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
      if (ok) e = i;
    }
    if (!e) throw ValidationError("group table has no identity");
    for (std::size_t i = 0; i < n; ++i) {
      if (!perm::is_permutation(table[i])) throw ValidationError("group table row " + std::to_string(i + 1) + " is not a permutation (no inverses)");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw ValidationError("group table is not associative at (" + std::to_string(a + 1) + "," +
                                  std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
          }
        }
      }
    }
    FiniteGroup G(Blank{});
    G.degree_ = n;
    for (std::size_t i = 0; i < n; ++i) G.add_element(Perm(table[i].begin(), table[i].end()));
    G.identity_ = *e;
    for (std::size_t i = 0; i < n; ++i) G.generators_.push_back(i);
    G.finish();
    return G;
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  std::size_t identity() const { return identity_; }
  std::vector<std::size_t> const& generators() const { return generators_; }
  Perm const& element(std::size_t i) const { return elements_.at(i); }
  std::vector<Perm> const& elements() const { return elements_; }

  std::optional<std::size_t> find(Perm const& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(Perm const& p) const {
    auto i = find(p);
    if (!i) throw ValidationError("permutation " + perm::to_cycle_string(p) + " is not in the group");
    return *i;
  }

  std::size_t mul(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * order() + b];
    return index_.at(perm::compose(elements_[a], elements_[b]));
  }

  std::size_t inv(std::size_t a) const { return inverses_[a]; }

  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }

  std::size_t commutator(std::size_t a, std::size_t b) const {  // a b a^-1 b^-1
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }

  std::size_t power(std::size_t a, std::int64_t e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    std::size_t r = identity_;
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (auto a : generators_) {
      for (auto b : generators_) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

 private:
  struct Blank {};
  explicit FiniteGroup(Blank) {}

  void add_element(Perm p) {
    index_.emplace(p, elements_.size());
    elements_.push_back(std::move(p));
  }

  void finish() {
    inverses_.resize(order());
    for (std::size_t i = 0; i < order(); ++i) inverses_[i] = index_.at(perm::inverse(elements_[i]));
    if (order() <= 2048) {
      table_.resize(order() * order());
      for (std::size_t a = 0; a < order(); ++a) {
        for (std::size_t b = 0; b < order(); ++b) {
          table_[a * order() + b] = index_.at(perm::compose(elements_[a], elements_[b]));
        }
      }
    }
  }

  std::size_t degree_ = 0;
  std::size_t identity_ = 0;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> table_;
};

/// Sorted element indices of a subgroup.
using Subgroup = std::vector<std::size_t>;

namespace group {

inline Subgroup generated_subgroup(FiniteGroup const& G, std::vector<std::size_t> const& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<std::size_t> elems{G.identity()};
  in[G.identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto s : gens) {
      std::size_t p = G.mul(elems[i], s);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline std::vector<bool> membership(FiniteGroup const& G, Subgroup const& H) {
  std::vector<bool> in(G.order(), false);
  for (auto h : H) in[h] = true;
  return in;
}

inline bool is_subgroup(FiniteGroup const& G, Subgroup const& H) {
  auto in = membership(G, H);
  if (H.empty() || !in[G.identity()]) return false;
  for (auto a : H) {
    for (auto b : H) {
      if (!in[G.mul(a, G.inv(b))]) return false;
    }
  }
  return true;
}

inline bool is_normal(FiniteGroup const& G, Subgroup const& H) {
  auto in = membership(G, H);
  for (auto g : G.generators()) {
    for (auto h : H) {
      if (!in[G.conj(g, h)]) return false;
    }
  }
  return true;
}

inline bool is_central(FiniteGroup const& G, Subgroup const& H) {
  for (auto g : G.generators()) {
    for (auto h : H) {
      if (G.mul(g, h) != G.mul(h, g)) return false;
    }
  }
  return true;
}

inline Subgroup normal_closure(FiniteGroup const& G, std::vector<std::size_t> const& gens) {
  std::vector<std::size_t> current = gens;
  for (;;) {
    Subgroup H = generated_subgroup(G, current);
    if (is_normal(G, H)) return H;
    auto in = membership(G, H);
    for (auto g : G.generators()) {
      for (auto h : H) {
        std::size_t c = G.conj(g, h);
        if (!in[c]) {
          current.push_back(c);
          in[c] = true;
        }
      }
    }
  }
}

inline Subgroup center(FiniteGroup const& G) {
  Subgroup Z;
  for (std::size_t a = 0; a < G.order(); ++a) {
    bool central = true;
    for (auto g : G.generators()) {
      if (G.mul(a, g) != G.mul(g, a)) {
        central = false;
        break;
      }
    }
    if (central) Z.push_back(a);
  }
  return Z;
}

inline Subgroup derived_subgroup(FiniteGroup const& G) {
  std::vector<std::size_t> comms;
  for (auto a : G.generators()) {
    for (auto b : G.generators()) comms.push_back(G.commutator(a, b));
  }
  return normal_closure(G, comms);
}

/// [A, B] for normal subgroups A, B: generated by all commutators.
inline Subgroup commutator_subgroup(FiniteGroup const& G, Subgroup const& A, Subgroup const& B) {
  std::vector<std::size_t> comms;
  std::vector<bool> seen(G.order(), false);
  for (auto a : A) {
    for (auto b : B) {
      std::size_t c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return normal_closure(G, comms);
}

struct Quotient {
  FiniteGroup group;
  std::vector<std::size_t> image;   // element of G -> element of G/N
  std::vector<std::size_t> coset;   // element of G -> coset number
  std::vector<std::size_t> coset_representative;
};

/// G/N realized by the left multiplication action on the cosets gN.
inline Quotient quotient(FiniteGroup const& G, Subgroup const& N) {
  if (!is_subgroup(G, N) || !is_normal(G, N)) throw ValidationError("quotient by a non-normal subgroup");
  Quotient q;
  q.coset.assign(G.order(), G.order());
  std::size_t count = 0;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (q.coset[g] != G.order()) continue;
    for (auto n : N) q.coset[G.mul(g, n)] = count;
    q.coset_representative.push_back(g);
    ++count;
  }
  auto action = [&](std::size_t g) {
    Perm p(count);
    for (std::size_t c = 0; c < count; ++c) {
      p[c] = static_cast<std::uint32_t>(q.coset[G.mul(g, q.coset_representative[c])]);
    }
    return p;
  };
  std::vector<Perm> gens;
  for (auto s : G.generators()) gens.push_back(action(s));
  q.group = FiniteGroup::from_generators(count, gens);
  q.image.resize(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) q.image[g] = q.group.index_of(action(g));
  return q;
}

/// Invariant factors (each > 1, d_1 | d_2 | ...) of a finite abelian group.
inline std::vector<std::int64_t> abelian_invariants(FiniteGroup const& A) {
  if (!A.is_abelian()) throw ValidationError("abelian_invariants of a nonabelian group");
  std::size_t n = A.order();
  std::vector<std::size_t> primes;
  {
    std::size_t m = n;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) primes.push_back(m);
  }
  // For each prime: multiset of exponents of cyclic p-factors.
  std::vector<std::vector<std::int64_t>> prime_powers;
  for (auto p : primes) {
    // c[k] = log_p #{a : a^(p^k) = 1}
    std::vector<std::size_t> logs{0};
    std::size_t pk = 1;
    for (;;) {
      pk *= p;
      std::size_t cnt = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (A.power(a, static_cast<std::int64_t>(pk)) == A.identity()) ++cnt;
      }
      std::size_t l = 0;
      for (std::size_t c = cnt; c > 1; c /= p) ++l;
      logs.push_back(l);
      if (logs.back() == logs[logs.size() - 2]) break;
    }
    // number of factors of order >= p^k is logs[k] - logs[k-1]
    std::vector<std::int64_t> exps;
    for (std::size_t k = 1; k < logs.size(); ++k) {
      std::size_t ge_k = logs[k] - logs[k - 1];
      std::size_t ge_k1 = k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
      for (std::size_t t = 0; t < ge_k - ge_k1; ++t) {
        std::int64_t q = 1;
        for (std::size_t i = 0; i < k; ++i) q *= static_cast<std::int64_t>(p);
        exps.push_back(q);
      }
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    prime_powers.push_back(exps);
  }
  std::size_t len = 0;
  for (auto const& e : prime_powers) len = std::max(len, e.size());
  std::vector<std::int64_t> inv(len, 1);
  for (auto const& e : prime_powers) {
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] *= e[i];
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

/// Comparison data for groups; isomorphism is never decided.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::int64_t> abelianization;  // invariants of G/[G,G]
  std::size_t center_order = 0;
  std::map<std::size_t, std::size_t> order_histogram;
  friend bool operator==(Fingerprint const&, Fingerprint const&) = default;
};

inline Fingerprint fingerprint(FiniteGroup const& G) {
  Fingerprint f;
  f.order = G.order();
  f.abelianization = abelian_invariants(quotient(G, derived_subgroup(G)).group);
  f.center_order = center(G).size();
  for (std::size_t a = 0; a < G.order(); ++a) ++f.order_histogram[G.element_order(a)];
  return f;
}

}  // namespace group
}  // namespace rackhopf
