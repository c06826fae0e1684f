#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "rackhopf/braiding/cocycle.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/group/covering.hpp"
#include "rackhopf/rack/catalog.hpp"
#include "rackhopf/rack/finite_group.hpp"

namespace rackhopf {

class NotAnAction : public ValidationError {
 public:
  explicit NotAnAction(std::string const& what) : ValidationError("not a group action: " + what) {}
};

class GradingIncompatible : public ValidationError {
 public:
  GradingIncompatible(std::size_t g, std::size_t x)
      : ValidationError("g.V_x is not in V_{g deg(x) g^-1} for group element " + std::to_string(g + 1) +
                        ", x = " + std::to_string(x + 1)),
        g(g), x(x) {}
  std::size_t g, x;
};

class BraidingMismatch : public ValidationError {
 public:
  BraidingMismatch(std::size_t x, std::size_t y)
      : ValidationError("deg(x).v_y differs from q(x,y) v_{x|>y} at (x,y) = (" + std::to_string(x + 1) + "," +
                        std::to_string(y + 1) + ")"),
        x(x), y(y) {}
  std::size_t x, y;
};

class NotCentral : public ValidationError {
 public:
  NotCentral() : ValidationError("subgroup is not central") {}
};

class ActsNontrivially : public ValidationError {
 public:
  explicit ActsNontrivially(std::size_t z)
      : ValidationError("group element " + std::to_string(z + 1) + " acts nontrivially on V"), z(z) {}
  std::size_t z;
};

/// g . v_x = z_N^exponent v_target.
struct ActionEntry {
  std::uint32_t target = 0;
  std::uint32_t exponent = 0;
  friend bool operator==(ActionEntry const&, ActionEntry const&) = default;
};

/// Yetter-Drinfeld datum of rack type over a finite group G: a G-graded
/// G-module V = kX with one-dimensional twists. All scalars share one root
/// order, the lcm of the cocycle and action orders.
class YDDatum {
 public:
  /// action[s][x] gives the action of the s-th generator of G; it is extended
  /// to all of G along the Cayley graph, with a consistency check.
  static YDDatum from_generator_action(Rack rack, Cocycle q, FiniteGroup G, std::vector<std::size_t> deg,
                                       std::vector<std::vector<ActionEntry>> const& action, unsigned action_order,
                                       std::string label = {}) {
    std::size_t d = rack.size();
    if (deg.size() != d) throw ValidationError("need one degree per rack element");
    for (auto g : deg) {
      if (g >= G.order()) throw ValidationError("degree out of range");
    }
    if (action.size() != G.generators().size()) throw ValidationError("need one action row per group generator");
    unsigned N = std::lcm(q.order(), action_order);
    unsigned scale = N / action_order;
    for (auto const& row : action) {
      if (row.size() != d) throw ValidationError("action row has wrong length");
      for (auto const& e : row) {
        if (e.target >= d) throw ValidationError("action target out of range");
      }
    }
    YDDatum D(BraidedSpace(std::move(rack), q.lifted(N)), std::move(G), std::move(deg), N);
    std::vector<bool> done(D.G_.order(), false);
    for (std::size_t x = 0; x < d; ++x) D.act_[D.G_.identity() * d + x] = {static_cast<std::uint32_t>(x), 0};
    done[D.G_.identity()] = true;
    std::vector<std::size_t> queue{D.G_.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t h = queue[i];
      for (std::size_t s = 0; s < D.G_.generators().size(); ++s) {
        std::size_t sh = D.G_.mul(D.G_.generators()[s], h);
        std::vector<ActionEntry> row(d);
        for (std::size_t x = 0; x < d; ++x) {
          ActionEntry a = D.act_[h * d + x];
          ActionEntry b = action[s][a.target];
          row[x] = {b.target, (a.exponent + b.exponent * scale) % N};
        }
        if (!done[sh]) {
          done[sh] = true;
          std::copy(row.begin(), row.end(), D.act_.begin() + static_cast<std::ptrdiff_t>(sh * d));
          queue.push_back(sh);
        } else if (!std::equal(row.begin(), row.end(), D.act_.begin() + static_cast<std::ptrdiff_t>(sh * d))) {
          throw NotAnAction("generator actions do not satisfy the relations of G");
        }
      }
    }
    D.label_ = std::move(label);
    return D;
  }

  /// action[g][x] for every element g of G.
  static YDDatum from_full_action(Rack rack, Cocycle q, FiniteGroup G, std::vector<std::size_t> deg,
                                  std::vector<std::vector<ActionEntry>> const& action, unsigned action_order,
                                  std::string label = {}) {
    std::size_t d = rack.size();
    if (deg.size() != d) throw ValidationError("need one degree per rack element");
    if (action.size() != G.order()) throw ValidationError("need one action row per group element");
    unsigned N = std::lcm(q.order(), action_order);
    unsigned scale = N / action_order;
    YDDatum D(BraidedSpace(std::move(rack), q.lifted(N)), std::move(G), std::move(deg), N);
    for (std::size_t g = 0; g < D.G_.order(); ++g) {
      if (action[g].size() != d) throw ValidationError("action row has wrong length");
      for (std::size_t x = 0; x < d; ++x) {
        if (action[g][x].target >= d) throw ValidationError("action target out of range");
        D.act_[g * d + x] = {action[g][x].target, (action[g][x].exponent * scale) % N};
      }
    }
    D.label_ = std::move(label);
    return D;
  }

  BraidedSpace const& space() const { return V_; }
  Rack const& rack() const { return V_.rack(); }
  Cocycle const& cocycle() const { return V_.cocycle(); }
  FiniteGroup const& group() const { return G_; }
  std::vector<std::size_t> const& degrees() const { return deg_; }
  std::size_t degree(std::size_t x) const { return deg_[x]; }
  unsigned order() const { return order_; }
  std::size_t dimension() const { return V_.dimension(); }
  std::string const& label() const { return label_; }
  ActionEntry act(std::size_t g, std::size_t x) const { return act_[g * dimension() + x]; }

  std::vector<std::vector<ActionEntry>> full_action() const {
    std::vector<std::vector<ActionEntry>> t(G_.order(), std::vector<ActionEntry>(dimension()));
    for (std::size_t g = 0; g < G_.order(); ++g) {
      for (std::size_t x = 0; x < dimension(); ++x) t[g][x] = act(g, x);
    }
    return t;
  }

 private:
  YDDatum(BraidedSpace V, FiniteGroup G, std::vector<std::size_t> deg, unsigned order)
      : V_(std::move(V)), G_(std::move(G)), deg_(std::move(deg)), order_(order), act_(G_.order() * V_.dimension()) {}

  BraidedSpace V_;
  FiniteGroup G_;
  std::vector<std::size_t> deg_;
  unsigned order_;
  std::vector<ActionEntry> act_;
  std::string label_;
};

struct YDReport {
  Subgroup Z0;                      // elements acting trivially on V
  bool link_indecomposable = false; // deg(X) generates G
  bool z0_central = false;
};

/// Checks the action, the Yetter-Drinfeld compatibility and the induced
/// braiding; throws on the first failure.
inline YDReport yd_verify(YDDatum const& D) {
  FiniteGroup const& G = D.group();
  std::size_t d = D.dimension();
  unsigned N = D.order();
  for (std::size_t x = 0; x < d; ++x) {
    if (!(D.act(G.identity(), x) == ActionEntry{static_cast<std::uint32_t>(x), 0})) {
      throw NotAnAction("identity acts nontrivially");
    }
  }
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::vector<bool> hit(d, false);
    for (std::size_t x = 0; x < d; ++x) hit[D.act(g, x).target] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw NotAnAction("an element acts non-bijectively");
    for (std::size_t h = 0; h < G.order(); ++h) {
      for (std::size_t x = 0; x < d; ++x) {
        ActionEntry a = D.act(h, x);
        ActionEntry b = D.act(g, a.target);
        ActionEntry gh = D.act(G.mul(g, h), x);
        if (!(gh == ActionEntry{b.target, (a.exponent + b.exponent) % N})) {
          throw NotAnAction("(gh).v != g.(h.v) for elements " + std::to_string(g + 1) + ", " + std::to_string(h + 1));
        }
      }
    }
  }
  for (std::size_t g = 0; g < G.order(); ++g) {
    for (std::size_t x = 0; x < d; ++x) {
      if (D.degree(D.act(g, x).target) != G.conj(g, D.degree(x))) throw GradingIncompatible(g, x);
    }
  }
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      ActionEntry a = D.act(D.degree(x), y);
      if (a.target != D.rack().op(x, y) || a.exponent != D.cocycle().exponent(x, y)) throw BraidingMismatch(x, y);
    }
  }
  YDReport rep;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool trivial = true;
    for (std::size_t x = 0; x < d && trivial; ++x) {
      trivial = D.act(g, x) == ActionEntry{static_cast<std::uint32_t>(x), 0};
    }
    if (trivial) rep.Z0.push_back(g);
  }
  rep.link_indecomposable = group::generated_subgroup(G, D.degrees()).size() == G.order();
  rep.z0_central = group::is_central(G, rep.Z0);
  return rep;
}

/// The datum over G/Z for a central subgroup Z acting trivially on V.
inline YDDatum quotient_datum(YDDatum const& D, Subgroup const& Z) {
  FiniteGroup const& G = D.group();
  if (!group::is_subgroup(G, Z)) throw ValidationError("Z is not a subgroup");
  if (!group::is_central(G, Z)) throw NotCentral();
  for (auto z : Z) {
    for (std::size_t x = 0; x < D.dimension(); ++x) {
      if (!(D.act(z, x) == ActionEntry{static_cast<std::uint32_t>(x), 0})) throw ActsNontrivially(z);
    }
  }
  auto q = group::quotient(G, Z);
  std::vector<std::size_t> deg;
  for (auto g : D.degrees()) deg.push_back(q.image[g]);
  std::vector<std::vector<ActionEntry>> action(q.group.order());
  for (std::size_t c = 0; c < q.coset_representative.size(); ++c) {
    std::size_t rep = q.coset_representative[c];
    std::vector<ActionEntry> row;
    for (std::size_t x = 0; x < D.dimension(); ++x) row.push_back(D.act(rep, x));
    action[q.image[rep]] = std::move(row);
  }
  YDDatum out = YDDatum::from_full_action(D.rack(), D.cocycle(), std::move(q.group), std::move(deg), action,
                                          D.order(), D.label().empty() ? std::string{} : D.label() + "/Z");
  yd_verify(out);
  return out;
}

class NotCompatible : public ValidationError {
 public:
  explicit NotCompatible(std::string const& witness) : ValidationError("covering data not compatible: " + witness) {}
};

namespace data {

/// G = C_n = <K>, V = kE, deg(E) = K, K.E = z_m E (m | n).
inline YDDatum rank1(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0 || n % m != 0) throw ValidationError("rank1 datum needs m | n");
  FiniteGroup G = groups::cyclic(n);
  Cocycle q(static_cast<unsigned>(m), {{1}});
  return YDDatum::from_generator_action(catalog::abelian(1), q, G, {G.generators()[0]}, {{{0, 1}}},
                                        static_cast<unsigned>(m),
                                        "rank1(" + std::to_string(n) + "," + std::to_string(m) + ")");
}

/// X = transpositions of S_n over G = S_n, deg(x) = x, g.v_x = s(g,x) v_{gxg^-1}
/// with s the sign character (q = -1) or the chi twist.
inline YDDatum symmetric(std::size_t n, bool chi) {
  Rack X = catalog::transpositions(n);
  FiniteGroup G = groups::symmetric(n);
  auto const& emb = *X.embedding();
  std::vector<std::size_t> deg;
  for (auto const& p : emb) deg.push_back(G.index_of(p));
  std::vector<std::vector<ActionEntry>> action;
  for (auto s : G.generators()) {
    Perm const& g = G.element(s);
    std::vector<ActionEntry> row;
    for (std::size_t x = 0; x < emb.size(); ++x) {
      Perm c = perm::conjugate(g, emb[x]);
      auto target = static_cast<std::uint32_t>(std::find(emb.begin(), emb.end(), c) - emb.begin());
      std::uint32_t e;
      if (chi) {
        std::uint32_t k = n, l = n;
        for (std::uint32_t i = 0; i < n; ++i) {
          if (emb[x][i] != i) (k == n ? k : l) = i;
        }
        e = g[k] < g[l] ? 0 : 1;
      } else {
        e = perm::sign(g) == 1 ? 0 : 1;
      }
      row.push_back({target, e});
    }
    action.push_back(std::move(row));
  }
  Cocycle q = chi ? cocycles::chi(X) : cocycles::minus_one(X.size());
  return YDDatum::from_generator_action(X, q, G, deg, action, 2,
                                        "S" + std::to_string(n) + (chi ? ":chi" : ":const"));
}

/// "rank1:n,m", "s3:const", "s3:chi", "s4:const", "s4:chi".
inline YDDatum by_name(std::string const& name) {
  if (name.rfind("rank1:", 0) == 0) {
    auto args = catalog::detail::parse_args(std::string_view(name).substr(6), name);
    if (args.size() != 2) throw UnknownName(name);
    return rank1(args[0], args[1]);
  }
  if (name.size() >= 3 && name[0] == 's' && (name[1] == '3' || name[1] == '4') && name[2] == ':') {
    std::string kind = name.substr(3);
    if (kind != "const" && kind != "chi") throw UnknownName(name);
    return symmetric(static_cast<std::size_t>(name[1] - '0'), kind == "chi");
  }
  throw UnknownName(name);
}

}  // namespace data
}  // namespace rackhopf
