#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rackhopf/exact/support.hpp"
#include "rackhopf/group/presentation.hpp"
#include "rackhopf/nichols/symmetrizer.hpp"
#include "rackhopf/rack/rack.hpp"

namespace rackhopf {

struct MinimalElement {
  std::vector<Word> support;   // sorted words of the support
  SparseVector representative; // over global word indices, leading coefficient 1
};

struct MinimalReport {
  std::size_t degree = 0;
  std::vector<MinimalElement> minimal;  // support size >= 2
  std::vector<Word> units;              // words w with e_w in B(V)(n)
};

struct MinimalLimits {
  SymmetrizerLimits symmetrizer;
  SupportSearchLimits support;
};

/// Support-minimal elements of B(V)(n), searched block by block (braid-group
/// orbits of words; for n = 2 these are the c-orbits).
inline MinimalReport minimal_elements(BraidedSpace const& V, std::size_t n, MinimalLimits limits = {}) {
  MinimalReport rep;
  rep.degree = n;
  if (n == 0) return rep;
  TensorBasis tb(V.dimension(), n, limits.symmetrizer.max_columns);
  SymmetrizerPlan plan(n, limits.symmetrizer);
  for (auto const& block : braid_blocks(V, tb)) {
    ExactMatrix cols = block_symmetrizer_matrix(V, plan, tb, block).transpose();
    std::vector<SparseVector> spanning;
    for (std::size_t j = 0; j < cols.rows(); ++j) spanning.push_back(cols.row(j));
    std::size_t r = rank(cols);
    if (r == 0) continue;
    if (r == block.size()) {
      for (auto w : block) rep.units.push_back(tb.word(w));
      continue;
    }
    auto found = support_minimal_vectors(spanning, block.size(), V.order(), limits.support);
    for (auto u : found.units) rep.units.push_back(tb.word(block[u]));
    for (auto const& m : found.minimal) {
      MinimalElement e;
      std::vector<SparseVector::Entry> entries;
      for (auto const& [i, c] : m.representative.entries()) {
        e.support.push_back(tb.word(block[i]));
        entries.emplace_back(block[i], c);
      }
      e.representative = SparseVector::from_sorted(std::move(entries));
      rep.minimal.push_back(std::move(e));
    }
  }
  std::sort(rep.units.begin(), rep.units.end());
  std::sort(rep.minimal.begin(), rep.minimal.end(),
            [](MinimalElement const& a, MinimalElement const& b) { return a.support < b.support; });
  return rep;
}

inline FreeWord word_as_group_element(Word const& w) {
  FreeWord f;
  for (auto l : w) f.push_back(static_cast<int>(l) + 1);
  return f;
}

struct RelatorSet {
  std::size_t degree = 0;
  std::vector<std::pair<Word, Word>> pairs;  // p ~ q from one minimal element
  std::vector<FreeWord> relators;            // p q^-1, freely reduced
};

struct CoveringRelators {
  std::vector<RelatorSet> by_degree;  // degrees 2..max_degree
  Presentation presentation;          // free group on X modulo all relators
};

/// Relators p_0 p_i^-1 for every minimal element with support p_0 < ... < p_k.
inline RelatorSet relators_from_minimal(MinimalReport const& rep) {
  RelatorSet rs;
  rs.degree = rep.degree;
  for (auto const& m : rep.minimal) {
    for (std::size_t i = 1; i < m.support.size(); ++i) {
      rs.pairs.emplace_back(m.support[0], m.support[i]);
      rs.relators.push_back(words::concat(word_as_group_element(m.support[0]),
                                          words::inverse(word_as_group_element(m.support[i]))));
    }
  }
  return rs;
}

inline CoveringRelators covering_relators(BraidedSpace const& V, std::size_t max_degree, MinimalLimits limits = {}) {
  CoveringRelators out{{}, Presentation(V.dimension())};
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < V.dimension(); ++x) labels.push_back("x" + std::to_string(x + 1));
  out.presentation.set_labels(std::move(labels));
  for (std::size_t n = 2; n <= max_degree; ++n) {
    RelatorSet rs = relators_from_minimal(minimal_elements(V, n, limits));
    for (auto const& r : rs.relators) out.presentation.add_relator(r);
    out.by_degree.push_back(std::move(rs));
  }
  return out;
}

struct GradingWitness {
  Word first;
  Word second;
  std::string invariant;  // "inner group" or "abelianization"
};

struct GradingConsistency {
  bool ok = true;
  std::size_t elements_checked = 0;
  std::optional<GradingWitness> witness;
};

/// Images of words of X in the two computable invariants of G_X: the inner
/// group (product of left translations) and the abelianization Z^{orbits}.
class EnvelopingInvariants {
 public:
  explicit EnvelopingInvariants(Rack const& r) : rack_(r) {
    auto orbits = rack_orbits(r);
    orbit_of_.resize(r.size());
    for (std::size_t b = 0; b < orbits.size(); ++b) {
      for (auto x : orbits[b]) orbit_of_[x] = b;
    }
    orbit_count_ = orbits.size();
  }

  Perm inner(Word const& w) const {
    Perm p = perm::identity(rack_.size());
    for (auto l : w) p = perm::compose(p, rack_.translation(l));
    return p;
  }

  std::vector<std::int64_t> abelian(Word const& w) const {
    std::vector<std::int64_t> v(orbit_count_, 0);
    for (auto l : w) ++v[orbit_of_[l]];
    return v;
  }

 private:
  Rack rack_;
  std::vector<std::size_t> orbit_of_;
  std::size_t orbit_count_ = 0;
};

/// Every support must be homogeneous for both invariants.
inline GradingConsistency grading_consistency(Rack const& r, std::vector<std::vector<Word>> const& supports) {
  EnvelopingInvariants inv(r);
  GradingConsistency res;
  for (auto const& s : supports) {
    ++res.elements_checked;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (inv.abelian(s[i]) != inv.abelian(s[0])) {
        res.ok = false;
        res.witness = GradingWitness{s[0], s[i], "abelianization"};
        return res;
      }
      if (inv.inner(s[i]) != inv.inner(s[0])) {
        res.ok = false;
        res.witness = GradingWitness{s[0], s[i], "inner group"};
        return res;
      }
    }
  }
  return res;
}

inline GradingConsistency grading_consistency(BraidedSpace const& V, std::size_t max_degree, MinimalLimits limits = {}) {
  std::vector<std::vector<Word>> supports;
  for (std::size_t n = 2; n <= max_degree; ++n) {
    for (auto& m : minimal_elements(V, n, limits).minimal) supports.push_back(std::move(m.support));
  }
  return grading_consistency(V.rack(), supports);
}

inline std::string format_word(Word const& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 'x' + std::to_string(w[i] + 1);
  }
  return s;
}

}  // namespace rackhopf
