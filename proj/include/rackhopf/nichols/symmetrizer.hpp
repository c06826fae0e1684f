#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rackhopf/braiding/cocycle.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/exact/matrix.hpp"
#include "rackhopf/rack/perm.hpp"

namespace rackhopf {

using Word = std::vector<std::uint32_t>;

struct SymmetrizerLimits {
  std::size_t max_degree = 8;        // largest n for which S_n is enumerated
  std::size_t max_columns = 10'000;  // bound on d^n
};

/// Words of length n over d letters, indexed in base d (first letter most
/// significant).
class TensorBasis {
 public:
  TensorBasis(std::size_t d, std::size_t n, std::size_t max_size = SIZE_MAX) : d_(d), n_(n), size_(1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (size_ > max_size / std::max<std::size_t>(d, 1)) {
        throw BoundExceeded("tensor basis of degree " + std::to_string(n) + " exceeds bound " +
                            std::to_string(max_size));
      }
      size_ *= d;
    }
  }

  std::size_t letters() const { return d_; }
  std::size_t degree() const { return n_; }
  std::size_t size() const { return size_; }

  std::size_t index(Word const& w) const {
    std::size_t k = 0;
    for (auto l : w) k = k * d_ + l;
    return k;
  }

  Word word(std::size_t k) const {
    Word w(n_);
    for (std::size_t i = n_; i-- > 0;) {
      w[i] = static_cast<std::uint32_t>(k % d_);
      k /= d_;
    }
    return w;
  }

 private:
  std::size_t d_, n_, size_;
};

namespace matsumoto {

/// Reduced word for sigma (one-line form), 0-based generators, found by
/// sorting away the leftmost descent. Applying the generators to a tensor in
/// the returned order (first element acts first) realizes sigma-hat.
inline std::vector<std::uint8_t> application_order(Perm sigma) {
  std::vector<std::uint8_t> steps;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < sigma.size() && sigma[i] < sigma[i + 1]) ++i;
    if (i + 1 >= sigma.size()) break;
    std::swap(sigma[i], sigma[i + 1]);
    steps.push_back(static_cast<std::uint8_t>(i));
  }
  return steps;
}

/// Same, choosing a uniformly random descent at every step.
template <class Rng>
std::vector<std::uint8_t> random_application_order(Perm sigma, Rng& rng) {
  std::vector<std::uint8_t> steps;
  for (;;) {
    std::vector<std::size_t> descents;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
      if (sigma[i] > sigma[i + 1]) descents.push_back(i);
    }
    if (descents.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
    std::size_t i = descents[pick(rng)];
    std::swap(sigma[i], sigma[i + 1]);
    steps.push_back(static_cast<std::uint8_t>(i));
  }
  return steps;
}

inline std::size_t inversions(Perm const& sigma) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) k += sigma[i] > sigma[j] ? 1 : 0;
  }
  return k;
}

}  // namespace matsumoto

/// Braid word of the Matsumoto lift of sigma as 1-based generator indices,
/// written as a product s_{i_1} s_{i_2} ... s_{i_k} (length = inversions).
inline std::vector<int> matsumoto_lift(Perm const& sigma, std::size_t max_degree = 8) {
  if (sigma.size() > max_degree) throw BoundExceeded("matsumoto_lift: degree exceeds bound");
  if (!perm::is_permutation(sigma)) throw ValidationError("matsumoto_lift: not a permutation");
  auto steps = matsumoto::application_order(sigma);
  std::vector<int> word;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) word.push_back(*it + 1);
  return word;
}

inline void apply_steps(BraidedSpace const& V, Monomial& m, std::vector<std::uint8_t> const& steps) {
  for (auto i : steps) V.apply(m, i);
}

/// All n! lifts of S_n, each as an application order of braid generators.
class SymmetrizerPlan {
 public:
  SymmetrizerPlan(std::size_t n, SymmetrizerLimits limits = {}) : n_(n) {
    if (n > limits.max_degree) {
      throw BoundExceeded("symmetrizer degree " + std::to_string(n) + " exceeds bound " +
                          std::to_string(limits.max_degree));
    }
    Perm p = perm::identity(n);
    do {
      lifts_.push_back(matsumoto::application_order(p));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::size_t degree() const { return n_; }
  std::vector<std::vector<std::uint8_t>> const& lifts() const { return lifts_; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint8_t>> lifts_;
};

/// Orbits of the braid group B_n on X^n (the support blocks of the
/// symmetrizer), each a sorted list of word indices; blocks ordered by least
/// word.
inline std::vector<std::vector<std::size_t>> braid_blocks(BraidedSpace const& V, TensorBasis const& tb) {
  std::size_t total = tb.size();
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t k = 0; k < total; ++k) {
    Word w = tb.word(k);
    for (std::size_t i = 0; i + 1 < tb.degree(); ++i) {
      Monomial m{w, 0};
      V.apply(m, i);
      std::size_t a = find(k), b = find(tb.index(m.word));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(total, total);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t root = find(k);
    if (block_of[root] == total) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(k);
  }
  return blocks;
}

/// The symmetrizer applied to the unit vector of word w, as a sparse vector
/// over global word indices. Monomials are accumulated as counts of powers of
/// z_N before conversion to exact scalars.
inline SparseVector symmetrized_word(BraidedSpace const& V, SymmetrizerPlan const& plan,
                                     TensorBasis const& tb, Word const& w) {
  unsigned N = V.order();
  std::map<std::size_t, std::vector<std::int64_t>> acc;
  for (auto const& steps : plan.lifts()) {
    Monomial m{w, 0};
    apply_steps(V, m, steps);
    auto& counts = acc[tb.index(m.word)];
    if (counts.empty()) counts.assign(N, 0);
    ++counts[m.exponent];
  }
  std::vector<SparseVector::Entry> entries;
  for (auto const& [k, counts] : acc) {
    CycScalar s = CycScalar::from_exponent_counts(N, counts);
    if (!s.is_zero()) entries.emplace_back(k, std::move(s));
  }
  return SparseVector::from_sorted(std::move(entries));
}

/// Matrix of the symmetrizer restricted to one block, in block-local indices
/// (column j is the image of the j-th word of the block).
inline ExactMatrix block_symmetrizer_matrix(BraidedSpace const& V, SymmetrizerPlan const& plan,
                                            TensorBasis const& tb, std::vector<std::size_t> const& block) {
  std::size_t b = block.size();
  unsigned N = V.order();
  std::vector<std::int64_t> counts(b * N);
  std::vector<std::vector<SparseVector::Entry>> rows(b);
  auto local = [&](std::size_t global) {
    auto it = std::lower_bound(block.begin(), block.end(), global);
    if (it == block.end() || *it != global) throw InvariantViolation("symmetrizer left its support block");
    return static_cast<std::size_t>(it - block.begin());
  };
  for (std::size_t j = 0; j < b; ++j) {
    std::fill(counts.begin(), counts.end(), 0);
    Word w = tb.word(block[j]);
    for (auto const& steps : plan.lifts()) {
      Monomial m{w, 0};
      apply_steps(V, m, steps);
      ++counts[local(tb.index(m.word)) * N + m.exponent];
    }
    for (std::size_t t = 0; t < b; ++t) {
      std::span<std::int64_t const> c(counts.data() + t * N, N);
      if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; })) continue;
      CycScalar s = CycScalar::from_exponent_counts(N, c);
      if (!s.is_zero()) rows[t].emplace_back(j, std::move(s));
    }
  }
  ExactMatrix a(b, b, N);
  for (std::size_t t = 0; t < b; ++t) a.set_row(t, SparseVector::from_sorted(std::move(rows[t])));
  return a;
}

/// dim B(V)(n): exact rank of the symmetrizer on V^{(x)n}, summed over blocks.
inline std::size_t symmetrizer_rank(BraidedSpace const& V, std::size_t n, SymmetrizerLimits limits = {}) {
  if (n == 0) return 1;
  TensorBasis tb(V.dimension(), n, limits.max_columns);
  SymmetrizerPlan plan(n, limits);
  std::size_t total = 0;
  for (auto const& block : braid_blocks(V, tb)) {
    total += rank(block_symmetrizer_matrix(V, plan, tb, block));
  }
  return total;
}

struct GradedReport {
  std::vector<std::size_t> dims;           // dims[n] = dim B(V)(n)
  std::vector<std::size_t> kernel_dims;    // dim ker of the symmetrizer in degree n
  std::optional<std::size_t> first_zero;   // least n with dims[n] = 0, if seen
  std::size_t total() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
};

class HilbertBoundExceeded : public BoundExceeded {
 public:
  HilbertBoundExceeded(std::string const& what, GradedReport partial)
      : BoundExceeded(what), partial(std::move(partial)) {}
  GradedReport partial;
};

/// dims of B(V) in degrees 0..cutoff, every degree computed.
inline GradedReport hilbert_series(BraidedSpace const& V, std::size_t cutoff, SymmetrizerLimits limits = {}) {
  GradedReport rep;
  std::size_t dn = 1;
  for (std::size_t n = 0; n <= cutoff; ++n) {
    std::size_t dim;
    try {
      dim = symmetrizer_rank(V, n, limits);
    } catch (BoundExceeded const& e) {
      throw HilbertBoundExceeded(std::string(e.what()) + " (degree " + std::to_string(n) + ")", rep);
    }
    rep.dims.push_back(dim);
    rep.kernel_dims.push_back(dn - dim);
    if (dim == 0 && !rep.first_zero) rep.first_zero = n;
    dn *= V.dimension();
  }
  return rep;
}

}  // namespace rackhopf
