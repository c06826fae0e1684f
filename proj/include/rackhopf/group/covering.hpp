#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/rack/finite_group.hpp"

namespace rackhopf {

class NotAHomomorphism : public ValidationError {
 public:
  NotAHomomorphism(std::size_t a, std::size_t b)
      : ValidationError("map is not multiplicative at elements (" + std::to_string(a + 1) + "," +
                        std::to_string(b + 1) + ")"),
        a(a), b(b) {}
  std::size_t a, b;
};

/// A homomorphism between finite groups stored as a full element map.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<std::size_t> map;  // source element -> target element

  bool surjective() const {
    std::vector<bool> hit(target.order(), false);
    for (auto t : map) hit[t] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  Subgroup kernel() const {
    Subgroup k;
    for (std::size_t h = 0; h < source.order(); ++h) {
      if (map[h] == target.identity()) k.push_back(h);
    }
    return k;
  }
};

/// Extends generator images to a homomorphism, checking well-definedness on
/// every edge of the Cayley graph.
inline GroupHom hom_from_generators(FiniteGroup const& source, FiniteGroup const& target,
                                    std::vector<std::size_t> const& generator_images) {
  auto const& gens = source.generators();
  if (generator_images.size() != gens.size()) throw ValidationError("need one image per source generator");
  std::vector<std::size_t> map(source.order(), SIZE_MAX);
  map[source.identity()] = target.identity();
  std::vector<std::size_t> queue{source.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::size_t h = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::size_t nh = source.mul(gens[s], h);
      std::size_t img = target.mul(generator_images[s], map[h]);
      if (map[nh] == SIZE_MAX) {
        map[nh] = img;
        queue.push_back(nh);
      } else if (map[nh] != img) {
        throw NotAHomomorphism(gens[s], h);
      }
    }
  }
  return {source, target, std::move(map)};
}

/// Checks f(ab) = f(a) f(b) for all pairs.
inline GroupHom hom_from_map(FiniteGroup const& source, FiniteGroup const& target, std::vector<std::size_t> map) {
  if (map.size() != source.order()) throw ValidationError("element map has wrong length");
  for (std::size_t a = 0; a < source.order(); ++a) {
    for (std::size_t b = 0; b < source.order(); ++b) {
      if (map[source.mul(a, b)] != target.mul(map[a], map[b])) throw NotAHomomorphism(a, b);
    }
  }
  return {source, target, std::move(map)};
}

struct Covering {
  Subgroup M;             // [N,H] <= M <= N
  FiniteGroup group;      // H/M
  std::vector<std::size_t> projection;  // H -> H/M
};

struct CoveringLattice {
  GroupHom f;
  Subgroup N;       // ker f
  Subgroup NH;      // [N, H]
  std::vector<Covering> coverings;  // ordered by |M| ascending, then lexicographically
  std::vector<std::string> checks;  // verified facts, for reports
};

namespace detail {

/// Subgroups M of G with lo <= M <= hi, by adjoining one element at a time.
inline std::vector<Subgroup> intermediate_subgroups(FiniteGroup const& G, Subgroup const& lo, Subgroup const& hi) {
  std::set<Subgroup> found{lo};
  std::vector<Subgroup> queue{lo};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto in = group::membership(G, queue[i]);
    for (auto n : hi) {
      if (in[n]) continue;
      std::vector<std::size_t> gens = queue[i];
      gens.push_back(n);
      Subgroup S = group::generated_subgroup(G, gens);
      if (found.insert(S).second) queue.push_back(std::move(S));
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](Subgroup const& a, Subgroup const& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace detail

/// All Hopf-covering groups H/M of G = H/N for a surjection f : H -> G,
/// [N,H] <= M <= N. Each projection H/[N,H] -> H/M -> H/N is re-verified as a
/// homomorphism.
inline CoveringLattice covering_lattice(GroupHom const& f, std::size_t bound = 4096) {
  FiniteGroup const& H = f.source;
  if (H.order() > bound) throw BoundExceeded("covering lattice: |H| exceeds bound " + std::to_string(bound));
  if (!f.surjective()) throw ValidationError("covering lattice needs a surjection");
  CoveringLattice L{f, f.kernel(), {}, {}, {}};
  Subgroup all(H.order());
  std::iota(all.begin(), all.end(), 0);
  L.NH = group::commutator_subgroup(H, L.N, all);
  auto Ms = detail::intermediate_subgroups(H, L.NH, L.N);
  for (auto const& M : Ms) {
    if (!group::is_normal(H, M)) throw InvariantViolation("intermediate subgroup is not normal");
    auto q = group::quotient(H, M);
    if (q.group.order() * M.size() != H.order()) throw InvariantViolation("|H/M| * |M| != |H|");
    L.coverings.push_back({M, std::move(q.group), std::move(q.image)});
  }
  // top = H/[N,H], bottom = H/N; maps top -> H/M -> bottom through cosets.
  Covering const& top = L.coverings.front();
  Covering const& bottom = L.coverings.back();
  auto induced = [&](Covering const& from, Covering const& to) {
    std::vector<std::size_t> m(from.group.order(), SIZE_MAX);
    for (std::size_t h = 0; h < H.order(); ++h) {
      std::size_t a = from.projection[h], b = to.projection[h];
      if (m[a] != SIZE_MAX && m[a] != b) throw InvariantViolation("projection between coverings is not well defined");
      m[a] = b;
    }
    return hom_from_map(from.group, to.group, std::move(m));
  };
  for (auto const& c : L.coverings) {
    induced(top, c);
    induced(c, bottom);
  }
  L.checks.push_back("projections H/[N,H] -> H/M -> H/N verified for " + std::to_string(L.coverings.size()) +
                     " subgroups M");
  return L;
}

namespace groups {

inline FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic(n) needs n >= 1");
  Perm k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = static_cast<std::uint32_t>((i + 1) % n);
  return FiniteGroup::from_generators(n, {k});
}

inline FiniteGroup symmetric(std::size_t n) {
  if (n < 2) return FiniteGroup::from_generators(1, {});
  std::vector<Perm> gens{perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<std::uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(perm::from_cycles(n, {cyc}));
  }
  return FiniteGroup::from_generators(n, gens);
}

/// V_4 = {e, (12)(34), (13)(24), (14)(23)} on 4 points.
inline FiniteGroup klein() {
  return FiniteGroup::from_generators(4, {perm::from_cycles(4, {{0, 1}, {2, 3}}), perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

/// Q_8 in its left regular representation; generators i, j.
inline FiniteGroup quaternion() {
  // Units 1, i, j, k with signs: index = 4*s + u.
  static constexpr int unit_mul[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto mul = [](std::uint32_t a, std::uint32_t b) {
    int s = ((a / 4) ^ (b / 4)) ? -1 : 1;
    auto const& r = unit_mul[a % 4][b % 4];
    s *= r[0];
    return static_cast<std::uint32_t>((s < 0 ? 4 : 0) + r[1]);
  };
  auto left = [&](std::uint32_t a) {
    Perm p(8);
    for (std::uint32_t b = 0; b < 8; ++b) p[b] = mul(a, b);
    return p;
  };
  return FiniteGroup::from_generators(8, {left(1), left(2)});
}

}  // namespace groups

/// Named example surjections: "c4-c2", "c6-c2", "s3-c2" (sign), "q8-v4".
inline GroupHom example_surjection(std::string const& name) {
  if (name == "c4-c2" || name == "c6-c2" || name == "c6-c3") {
    std::size_t n = name[1] - '0', m = name[4] - '0';
    FiniteGroup H = groups::cyclic(n), G = groups::cyclic(m);
    return hom_from_generators(H, G, {G.generators()[0]});
  }
  if (name == "s3-c2") {
    FiniteGroup H = groups::symmetric(3), G = groups::cyclic(2);
    std::vector<std::size_t> imgs;
    for (auto s : H.generators()) imgs.push_back(perm::sign(H.element(s)) == 1 ? G.identity() : G.generators()[0]);
    return hom_from_generators(H, G, imgs);
  }
  if (name == "q8-v4") {
    FiniteGroup H = groups::quaternion(), G = groups::klein();
    return hom_from_generators(H, G, {G.generators()[0], G.generators()[1]});
  }
  throw UnknownName(name);
}

}  // namespace rackhopf
