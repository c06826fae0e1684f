#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/exact/matrix.hpp"
#include "rackhopf/hopf/datum.hpp"
#include "rackhopf/nichols/minimal.hpp"
#include "rackhopf/nichols/symmetrizer.hpp"

namespace rackhopf {

class AxiomFails : public InvariantViolation {
 public:
  AxiomFails(std::string axiom, std::string witness)
      : InvariantViolation("Hopf axiom '" + axiom + "' fails: " + witness),
        axiom(std::move(axiom)), witness(std::move(witness)) {}
  std::string axiom;
  std::string witness;
};

struct SliceLimits {
  std::size_t max_dimension = 5000;
  SymmetrizerLimits symmetrizer;
};

/// Elements of the slice are sparse vectors over the basis b_k # g; elements
/// of slice (x) slice use index a * dim + b, triple tensors a * dim^2 + b * dim + c.
///
/// B(V)(n) is realized inside V^{(x)n} (quantum shuffle model): its basis is
/// b_w = S_n(e_w) for the lexicographically first words w whose symmetrized
/// images are independent. Then b_u b_w = S(e_{uw}), the coproduct is
/// deconcatenation, and (b # g)(b' # h) = b (g.b') # gh.
class HopfSlice {
 public:
  struct BasisElement {
    std::size_t degree;
    std::size_t k;  // position in the basis of B(V)(degree)
    std::size_t g;  // group element
  };

  HopfSlice(YDDatum datum, std::size_t cutoff, SliceLimits limits = {})
      : D_(std::move(datum)), cutoff_(cutoff), limits_(limits) {
    yd_verify(D_);
    std::size_t d = D_.dimension(), G = D_.group().order();
    std::size_t total = 0;
    for (std::size_t n = 0; n <= cutoff_; ++n) {
      tensor_.emplace_back(d, n, limits_.symmetrizer.max_columns);
      plans_.emplace_back(n, limits_.symmetrizer);
      std::size_t target = symmetrizer_rank(D_.space(), n, limits_.symmetrizer);
      total += target;
      if (total * G > limits_.max_dimension) {
        throw BoundExceeded("slice dimension exceeds bound " + std::to_string(limits_.max_dimension));
      }
      echelon_.emplace_back(D_.order());
      words_.emplace_back();
      for (std::size_t w = 0; w < tensor_[n].size() && words_[n].size() < target; ++w) {
        if (echelon_[n].insert(symmetrized(n, w))) words_[n].push_back(w);
      }
      if (words_[n].size() != target) throw InvariantViolation("image basis size differs from symmetrizer rank");
    }
    offset_.push_back(0);
    for (std::size_t n = 0; n <= cutoff_; ++n) offset_.push_back(offset_.back() + words_[n].size() * G);
    dim_ = offset_.back();
  }

  YDDatum const& datum() const { return D_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t dimension() const { return dim_; }
  std::size_t group_order() const { return D_.group().order(); }
  std::vector<std::size_t> degree_dims() const {
    std::vector<std::size_t> v;
    for (auto const& w : words_) v.push_back(w.size());
    return v;
  }
  std::vector<std::size_t> const& basis_words(std::size_t n) const { return words_.at(n); }
  TensorBasis const& tensor_basis(std::size_t n) const { return tensor_.at(n); }

  std::size_t index(std::size_t n, std::size_t k, std::size_t g) const { return offset_[n] + k * group_order() + g; }
  BasisElement element(std::size_t i) const {
    std::size_t n = 0;
    while (offset_[n + 1] <= i) ++n;
    std::size_t r = i - offset_[n];
    return {n, r / group_order(), r % group_order()};
  }
  std::size_t degree(std::size_t i) const { return element(i).degree; }
  std::string describe(std::size_t i) const {
    auto e = element(i);
    std::string w = e.degree ? format_word(tensor_[e.degree].word(words_[e.degree][e.k])) : "1";
    return "S(" + w + ") # g" + std::to_string(e.g + 1);
  }

  SparseVector unit() const { return SparseVector::unit(index(0, 0, D_.group().identity()), D_.order()); }
  SparseVector group_like(std::size_t g) const { return SparseVector::unit(index(0, 0, g), D_.order()); }

  /// Product of basis elements, or nullopt when the degree leaves the slice.
  std::optional<SparseVector> product(std::size_t i, std::size_t j) const {
    auto key = i * dim_ + j;
    if (auto it = products_.find(key); it != products_.end()) return it->second;
    auto a = element(i), b = element(j);
    if (a.degree + b.degree > cutoff_) return std::nullopt;
    Word u = tensor_[a.degree].word(words_[a.degree][a.k]);
    Word w = tensor_[b.degree].word(words_[b.degree][b.k]);
    std::uint32_t e = 0;
    for (auto& l : w) {
      ActionEntry t = D_.act(a.g, l);
      l = t.target;
      e = (e + t.exponent) % D_.order();
    }
    u.insert(u.end(), w.begin(), w.end());
    std::size_t n = a.degree + b.degree;
    SparseVector coords = coordinates(n, symmetrized(n, tensor_[n].index(u)));
    std::size_t gh = D_.group().mul(a.g, b.g);
    SparseVector out;
    CycScalar z = CycScalar::root_of_unity(D_.order(), e);
    for (auto const& [k, c] : coords.entries()) out.axpy(z * c, SparseVector::unit(index(n, k, gh), D_.order()));
    products_.emplace(key, out);
    return out;
  }

  /// Bilinear product; nullopt if some pair of terms leaves the slice.
  std::optional<SparseVector> product(SparseVector const& x, SparseVector const& y) const {
    SparseVector out;
    for (auto const& [i, a] : x.entries()) {
      for (auto const& [j, b] : y.entries()) {
        auto p = product(i, j);
        if (!p) return std::nullopt;
        out.axpy(a * b, *p);
      }
    }
    return out;
  }

  /// Delta(b # g) = sum (v_{<=i} # deg(v_{>i}) g) (x) (v_{>i} # g) over the
  /// words v of b, re-expressed in the slice basis.
  SparseVector const& coproduct(std::size_t i) const {
    if (auto it = coproducts_.find(i); it != coproducts_.end()) return it->second;
    auto a = element(i);
    std::size_t n = a.degree;
    SparseVector b = symmetrized(n, words_[n][a.k]);
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, std::vector<SparseVector::Entry>>> parts;
    for (auto const& [v, c] : b.entries()) {
      Word w = tensor_[n].word(v);
      for (std::size_t s = 0; s <= n; ++s) {
        Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        Word right(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
        std::size_t h = a.g;
        for (auto it = right.rbegin(); it != right.rend(); ++it) h = D_.group().mul(D_.degree(*it), h);
        parts[{s, h}][tensor_[n - s].index(right)].emplace_back(tensor_[s].index(left), c);
      }
    }
    SparseVector out;
    for (auto& [key, columns] : parts) {
      auto [s, h] = key;
      std::map<std::size_t, std::vector<SparseVector::Entry>> by_left;
      for (auto& [r, entries] : columns) {
        std::sort(entries.begin(), entries.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
        SparseVector col = SparseVector::from_sorted(std::move(entries));
        SparseVector coords = coordinates(s, col);
        for (auto const& [k, c] : coords.entries()) by_left[k].emplace_back(r, c);
      }
      for (auto& [k, entries] : by_left) {
        SparseVector row = SparseVector::from_sorted(std::move(entries));
        SparseVector coords = coordinates(n - s, row);
        for (auto const& [k2, c] : coords.entries()) {
          std::size_t left = index(s, k, h), right = index(n - s, k2, a.g);
          out.axpy(c, SparseVector::unit(left * dim_ + right, D_.order()));
        }
      }
    }
    return coproducts_.emplace(i, std::move(out)).first->second;
  }

  SparseVector coproduct(SparseVector const& x) const {
    SparseVector out;
    for (auto const& [i, c] : x.entries()) out.axpy(c, coproduct(i));
    return out;
  }

  CycScalar counit(std::size_t i) const {
    return element(i).degree == 0 ? CycScalar::one(D_.order()) : CycScalar::zero(D_.order());
  }
  CycScalar counit(SparseVector const& x) const {
    CycScalar s = CycScalar::zero(D_.order());
    for (auto const& [i, c] : x.entries()) s += c * counit(i);
    return s;
  }

  /// Antipode, synthesized degree by degree from S * id = unit o counit.
  SparseVector const& antipode(std::size_t i) const {
    if (auto it = antipodes_.find(i); it != antipodes_.end()) return it->second;
    auto a = element(i);
    SparseVector out;
    if (a.degree == 0) {
      out = group_like(D_.group().inv(a.g));
    } else {
      SparseVector acc;
      for (auto const& [t, c] : coproduct(i).entries()) {
        std::size_t x1 = t / dim_, x2 = t % dim_;
        if (degree(x1) == a.degree) continue;  // the term x (x) (1 # g)
        auto p = product(antipode(x1), SparseVector::unit(x2, D_.order()));
        if (!p) throw InvariantViolation("antipode recursion left the slice");
        acc.axpy(c, *p);
      }
      auto p = product(acc, group_like(D_.group().inv(a.g)));
      if (!p) throw InvariantViolation("antipode recursion left the slice");
      out = *p;
      out.scale(-CycScalar::one(D_.order()));
    }
    return antipodes_.emplace(i, std::move(out)).first->second;
  }

  SparseVector antipode(SparseVector const& x) const {
    SparseVector out;
    for (auto const& [i, c] : x.entries()) out.axpy(c, antipode(i));
    return out;
  }

  /// Image of a vector of words of degree n in the basis of B(V)(n).
  SparseVector coordinates(std::size_t n, SparseVector const& y) const {
    auto c = echelon_[n].coordinates(y);
    if (!c) throw InvariantViolation("vector is not in B(V)(" + std::to_string(n) + ")");
    return *c;
  }

  SparseVector symmetrized(std::size_t n, std::size_t w) const {
    auto key = std::make_pair(n, w);
    if (auto it = symmetrized_.find(key); it != symmetrized_.end()) return it->second;
    SparseVector v = n == 0 ? SparseVector::unit(0, D_.order())
                            : symmetrized_word(D_.space(), plans_[n], tensor_[n], tensor_[n].word(w));
    return symmetrized_.emplace(key, v).first->second;
  }

 private:
  YDDatum D_;
  std::size_t cutoff_;
  SliceLimits limits_;
  std::vector<TensorBasis> tensor_;
  std::vector<SymmetrizerPlan> plans_;
  std::vector<EchelonBasis> echelon_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::size_t> offset_;
  std::size_t dim_ = 0;
  mutable std::map<std::pair<std::size_t, std::size_t>, SparseVector> symmetrized_;
  mutable std::unordered_map<std::size_t, SparseVector> products_;
  mutable std::unordered_map<std::size_t, SparseVector> coproducts_;
  mutable std::unordered_map<std::size_t, SparseVector> antipodes_;
};

struct AxiomCheck {
  std::string axiom;
  std::size_t max_degree = 0;  // checked on inputs of total degree <= this
  std::size_t instances = 0;
  bool ok = true;
  std::string witness;
};

struct HopfReport {
  std::size_t dimension = 0;
  std::vector<std::size_t> degree_dims;
  std::size_t group_order = 0;
  std::vector<AxiomCheck> checks;
  std::size_t group_likes = 0;       // basis elements with Delta(x) = x (x) x
  std::size_t skew_primitives = 0;   // degree-1 basis elements x with Delta(x) = x (x) 1#g + 1#h (x) x
  std::size_t degree_one_dimension = 0;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](AxiomCheck const& c) { return c.ok; });
  }
  void require_all() const {
    for (auto const& c : checks) {
      if (!c.ok) throw AxiomFails(c.axiom, c.witness);
    }
  }
};

struct VerifyOptions {
  bool coalgebra = true;
  bool algebra = true;
  bool bialgebra = true;
  bool antipode = true;
};

/// Exact checks on basis elements in closed degrees.
inline HopfReport verify_hopf(HopfSlice const& H, VerifyOptions opt = {}) {
  HopfReport rep;
  std::size_t dim = H.dimension();
  std::size_t D = H.cutoff();
  rep.dimension = dim;
  rep.degree_dims = H.degree_dims();
  rep.group_order = H.group_order();
  unsigned N = H.datum().order();
  auto unit_vec = [&](std::size_t i) { return SparseVector::unit(i, N); };
  auto fail = [](AxiomCheck& c, std::string w) {
    if (c.ok) {
      c.ok = false;
      c.witness = std::move(w);
    }
  };

  if (opt.coalgebra) {
    AxiomCheck coassoc{"coassociativity", D, 0, true, {}}, counit{"counit", D, 0, true, {}};
    for (std::size_t i = 0; i < dim; ++i) {
      SparseVector const& d1 = H.coproduct(i);
      SparseVector lhs, rhs;
      for (auto const& [t, c] : d1.entries()) {
        std::size_t a = t / dim, b = t % dim;
        for (auto const& [t2, c2] : H.coproduct(a).entries()) {
          lhs.axpy(c * c2, unit_vec((t2 / dim) * dim * dim + (t2 % dim) * dim + b));
        }
        for (auto const& [t2, c2] : H.coproduct(b).entries()) {
          rhs.axpy(c * c2, unit_vec(a * dim * dim + t2));
        }
      }
      ++coassoc.instances;
      if (!(lhs == rhs)) fail(coassoc, H.describe(i));
      SparseVector l, r;
      for (auto const& [t, c] : d1.entries()) {
        std::size_t a = t / dim, b = t % dim;
        CycScalar ea = H.counit(a), eb = H.counit(b);
        if (!ea.is_zero()) l.axpy(c * ea, unit_vec(b));
        if (!eb.is_zero()) r.axpy(c * eb, unit_vec(a));
      }
      ++counit.instances;
      if (!(l == unit_vec(i)) || !(r == unit_vec(i))) fail(counit, H.describe(i));
    }
    rep.checks.push_back(coassoc);
    rep.checks.push_back(counit);
  }

  if (opt.algebra) {
    AxiomCheck unit{"unit", D, 0, true, {}}, assoc{"associativity", D, 0, true, {}};
    SparseVector one = H.unit();
    for (std::size_t i = 0; i < dim; ++i) {
      ++unit.instances;
      if (!(*H.product(one, unit_vec(i)) == unit_vec(i)) || !(*H.product(unit_vec(i), one) == unit_vec(i))) {
        fail(unit, H.describe(i));
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (H.degree(i) + H.degree(j) > D) continue;
        SparseVector ij = *H.product(i, j);
        for (std::size_t k = 0; k < dim; ++k) {
          if (H.degree(i) + H.degree(j) + H.degree(k) > D) continue;
          ++assoc.instances;
          auto l = H.product(ij, unit_vec(k));
          auto r = H.product(unit_vec(i), *H.product(j, k));
          if (!l || !r || !(*l == *r)) fail(assoc, H.describe(i) + " * " + H.describe(j) + " * " + H.describe(k));
        }
      }
    }
    rep.checks.push_back(unit);
    rep.checks.push_back(assoc);
  }

  if (opt.bialgebra) {
    AxiomCheck bi{"bialgebra", D, 0, true, {}}, eps{"counit multiplicative", D, 0, true, {}};
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (H.degree(i) + H.degree(j) > D) continue;
        ++bi.instances;
        ++eps.instances;
        SparseVector ij = *H.product(i, j);
        if (!(H.counit(ij) == H.counit(i) * H.counit(j))) fail(eps, H.describe(i) + " * " + H.describe(j));
        SparseVector lhs = H.coproduct(ij);
        SparseVector rhs;
        for (auto const& [s, c] : H.coproduct(i).entries()) {
          for (auto const& [t, c2] : H.coproduct(j).entries()) {
            auto p1 = H.product(s / dim, t / dim);
            auto p2 = H.product(s % dim, t % dim);
            if (!p1 || !p2) throw InvariantViolation("bialgebra check left the slice");
            for (auto const& [u, a] : p1->entries()) {
              for (auto const& [v, b] : p2->entries()) rhs.axpy(c * c2 * a * b, unit_vec(u * dim + v));
            }
          }
        }
        if (!(lhs == rhs)) fail(bi, H.describe(i) + " * " + H.describe(j));
      }
    }
    rep.checks.push_back(bi);
    rep.checks.push_back(eps);
  }

  if (opt.antipode) {
    AxiomCheck left{"antipode (S * id)", D, 0, true, {}}, right{"antipode (id * S)", D, 0, true, {}};
    for (std::size_t i = 0; i < dim; ++i) {
      SparseVector l, r;
      for (auto const& [t, c] : H.coproduct(i).entries()) {
        auto pl = H.product(H.antipode(t / dim), unit_vec(t % dim));
        auto pr = H.product(unit_vec(t / dim), H.antipode(t % dim));
        if (!pl || !pr) throw InvariantViolation("antipode check left the slice");
        l.axpy(c, *pl);
        r.axpy(c, *pr);
      }
      SparseVector expect;
      if (!H.counit(i).is_zero()) expect.axpy(H.counit(i), H.unit());
      ++left.instances;
      ++right.instances;
      if (!(l == expect)) fail(left, H.describe(i));
      if (!(r == expect)) fail(right, H.describe(i));
    }
    rep.checks.push_back(left);
    rep.checks.push_back(right);
  }

  for (std::size_t i = 0; i < dim; ++i) {
    SparseVector const& d = H.coproduct(i);
    if (d == SparseVector::unit(i * dim + i, N)) ++rep.group_likes;
    if (H.degree(i) == 1) {
      ++rep.degree_one_dimension;
      auto e = H.element(i);
      bool skew = false;
      for (std::size_t h = 0; h < H.group_order() && !skew; ++h) {
        SparseVector expect;
        expect.axpy(CycScalar::one(N), unit_vec(i * dim + H.index(0, 0, e.g)));
        expect.axpy(CycScalar::one(N), unit_vec(H.index(0, 0, h) * dim + i));
        skew = d == expect;
      }
      if (skew) ++rep.skew_primitives;
    }
  }
  return rep;
}

struct CoveringMapReport {
  std::size_t source_dimension = 0;
  std::size_t target_dimension = 0;
  std::size_t kernel_order = 0;
  std::size_t algebra_instances = 0;
  std::size_t coalgebra_instances = 0;
  std::size_t path_elements = 0;  // minimal elements and single paths of B(V), degrees 1..D
  std::size_t min_lifts = 0;
  std::size_t max_lifts = 0;
};

/// Checks that b # h -> b # f(h) is an algebra and coalgebra map between the
/// slices, after checking that the target datum is the source datum pushed
/// forward along f.
inline CoveringMapReport covering_map_check(HopfSlice const& src, HopfSlice const& tgt, GroupHom const& f) {
  YDDatum const& S = src.datum();
  YDDatum const& T = tgt.datum();
  if (!(S.rack() == T.rack()) || !(S.cocycle() == T.cocycle())) throw NotCompatible("braided spaces differ");
  if (src.cutoff() != tgt.cutoff() || src.degree_dims() != tgt.degree_dims()) throw NotCompatible("cutoffs differ");
  if (f.source.order() != S.group().order() || f.target.order() != T.group().order() ||
      f.source.elements() != S.group().elements() || f.target.elements() != T.group().elements()) {
    throw NotCompatible("group map does not match the data's groups");
  }
  if (!f.surjective()) throw NotCompatible("group map is not surjective");
  for (std::size_t x = 0; x < S.dimension(); ++x) {
    if (f.map[S.degree(x)] != T.degree(x)) throw NotCompatible("deg(x" + std::to_string(x + 1) + ") not preserved");
  }
  for (std::size_t h = 0; h < S.group().order(); ++h) {
    for (std::size_t x = 0; x < S.dimension(); ++x) {
      if (!(S.act(h, x) == T.act(f.map[h], x))) {
        throw NotCompatible("action of element " + std::to_string(h + 1) + " on x" + std::to_string(x + 1) +
                            " not preserved");
      }
    }
  }
  std::size_t sd = src.dimension(), td = tgt.dimension();
  unsigned N = S.order();
  auto F = [&](std::size_t i) {
    auto e = src.element(i);
    return tgt.index(e.degree, e.k, f.map[e.g]);
  };
  auto Fv = [&](SparseVector const& x) {
    SparseVector out;
    for (auto const& [i, c] : x.entries()) out.axpy(c, SparseVector::unit(F(i), N));
    return out;
  };
  CoveringMapReport rep;
  rep.source_dimension = sd;
  rep.target_dimension = td;
  rep.kernel_order = f.kernel().size();
  for (std::size_t i = 0; i < sd; ++i) {
    for (std::size_t j = 0; j < sd; ++j) {
      auto p = src.product(i, j);
      if (!p) continue;
      ++rep.algebra_instances;
      if (!(Fv(*p) == *tgt.product(F(i), F(j)))) {
        throw NotCompatible("product of " + src.describe(i) + " and " + src.describe(j));
      }
    }
    ++rep.coalgebra_instances;
    SparseVector img;
    for (auto const& [t, c] : src.coproduct(i).entries()) {
      img.axpy(c, SparseVector::unit(F(t / sd) * td + F(t % sd), N));
    }
    if (!(img == tgt.coproduct(F(i)))) throw NotCompatible("coproduct of " + src.describe(i));
    if (!(Fv(src.antipode(i)) == tgt.antipode(F(i)))) throw NotCompatible("antipode of " + src.describe(i));
  }
  // Paths of the target quiver: minimal elements and single paths, per vertex.
  rep.min_lifts = SIZE_MAX;
  for (std::size_t n = 1; n <= src.cutoff(); ++n) {
    auto m = minimal_elements(S.space(), n);
    std::size_t count = m.minimal.size() + m.units.size();
    rep.path_elements += count * T.group().order();
    if (count == 0) continue;
    for (std::size_t g = 0; g < T.group().order(); ++g) {
      std::size_t lifts = 0;
      for (std::size_t h = 0; h < S.group().order(); ++h) lifts += f.map[h] == g ? 1 : 0;
      rep.min_lifts = std::min(rep.min_lifts, lifts);
      rep.max_lifts = std::max(rep.max_lifts, lifts);
    }
  }
  if (rep.min_lifts == SIZE_MAX) rep.min_lifts = 0;
  return rep;
}

}  // namespace rackhopf
