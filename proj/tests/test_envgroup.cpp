#include <catch_amalgamated.hpp>

#include "rackhopf/braiding/orbits.hpp"
#include "rackhopf/group/covering.hpp"
#include "rackhopf/group/presentation.hpp"
#include "rackhopf/group/todd_coxeter.hpp"
#include "rackhopf/rack/catalog.hpp"

using namespace rackhopf;

namespace {

// Presentation of a finite group on all its elements with the full
// multiplication table as relators.
Presentation table_presentation(FiniteGroup const& G) {
  Presentation p(G.order());
  for (std::size_t a = 0; a < G.order(); ++a) {
    for (std::size_t b = 0; b < G.order(); ++b) {
      p.add_relator({static_cast<int>(a) + 1, static_cast<int>(b) + 1, -static_cast<int>(G.mul(a, b)) - 1});
    }
  }
  return p;
}

}  // namespace

TEST_CASE("word reduction and parsing", "[envgroup][words]") {
  REQUIRE(words::free_reduce({1, 2, -2, -1, 3}) == FreeWord{3});
  REQUIRE(words::cyclic_reduce({-1, 2, 3, 1}) == FreeWord{2, 3});
  REQUIRE(words::inverse({1, -2}) == FreeWord{2, -1});
  REQUIRE(words::parse("a b a^-1 b^2", 2) == FreeWord{1, 2, -1, 2, 2});
  REQUIRE(words::parse("x1 x3^-1", 3) == FreeWord{1, -3});
  REQUIRE(words::parse("g2 g2^-1", 2).empty());
  REQUIRE_THROWS_AS(words::parse("x4", 3), ValidationError);
  REQUIRE_THROWS_AS(words::parse("a^x", 3), ValidationError);
  REQUIRE(words::parse(words::format({1, -2, 2, 2, 3}), 3) == words::free_reduce({1, -2, 2, 2, 3}));
  // Canonical forms agree on conjugates and inverses.
  FreeWord w{1, 2, -1, -3};
  REQUIRE(words::canonical_relator(w) == words::canonical_relator({2, -1, -3, 1}));
  REQUIRE(words::canonical_relator(w) == words::canonical_relator(words::inverse(w)));
}

TEST_CASE("enveloping presentation", "[envgroup]") {
  Presentation p = enveloping_presentation(catalog::transpositions(3));
  REQUIRE(p.generators() == 3);
  REQUIRE(p.relators().size() == 6);  // x |> x = x gives trivial relators
  REQUIRE(p.labels() == std::vector<std::string>{"g1", "g2", "g3"});
  // g_x g_y = g_{x |> y} g_x holds in Inn(X) via x -> phi_x.
  for (auto const& name : {"transpositions:4", "tetrahedron", "affine:5,2", "reflections_D4", "four_cycles_S4"}) {
    Rack r = catalog::by_name(name);
    FiniteGroup inn = inner_group(r);
    REQUIRE_NOTHROW(verify_quotient(enveloping_presentation(r), inn, inn.generators()));
  }
}

TEST_CASE("abelianization of G_X has free rank = number of rack orbits", "[envgroup][property]") {
  for (auto const& name : {"transpositions:3", "transpositions:5", "four_cycles_S4", "tetrahedron", "affine:7,3",
                           "reflections_D4", "abelian:2", "dihedral:4", "dihedral:5"}) {
    Rack r = catalog::by_name(name);
    INFO(name);
    auto ab = abelianization(enveloping_presentation(r));
    REQUIRE(ab.free_rank == rack_orbits(r).size());
    REQUIRE(ab.torsion.empty());
  }
}

TEST_CASE("verify_quotient rejects bad images", "[envgroup]") {
  Rack r = catalog::transpositions(3);
  FiniteGroup inn = inner_group(r);
  auto gens = inn.generators();
  std::vector<std::size_t> bad = {gens[0], gens[1], gens[1]};
  REQUIRE_THROWS_AS(verify_quotient(enveloping_presentation(r), inn, bad), RelatorFails);
  std::vector<std::size_t> trivial(3, inn.identity());
  REQUIRE_THROWS_AS(verify_quotient(enveloping_presentation(r), inn, trivial), NotSurjective);
  REQUIRE_THROWS_AS(verify_quotient(enveloping_presentation(r), inn, {0}), ValidationError);
}

TEST_CASE("coset enumeration: G_X with squared generators for transpositions(3)", "[envgroup][tc]") {
  Presentation p = enveloping_presentation(catalog::transpositions(3));
  auto full = todd_coxeter(p, {{1, 1}}, {}, 1000);
  REQUIRE(full.index == 6);
  // Independent count: [G : <g1>] * |<g1>|.
  auto coset = todd_coxeter(p, {{1, 1}}, {{1}}, 1000);
  REQUIRE(coset.index * 2 == full.index);
  // S_3 is a quotient, so the order is at least 6.
  FiniteGroup inn = inner_group(catalog::transpositions(3));
  REQUIRE_NOTHROW(verify_quotient(p, inn, inn.generators()));
  REQUIRE(todd_coxeter(p, {{1, 1}}, {{1}, {2}, {3}}, 1000).index == 1);
}

TEST_CASE("coset enumeration: small presentations", "[envgroup][tc]") {
  Presentation c5(1);
  c5.add_relator({1, 1, 1, 1, 1});
  REQUIRE(todd_coxeter(c5, {}, {}, 100).index == 5);
  Presentation s3(2);
  s3.add_relator({1, 1});
  s3.add_relator({2, 2});
  s3.add_relator({1, 2, 1, 2, 1, 2});
  REQUIRE(todd_coxeter(s3, {}, {}, 100).index == 6);
  REQUIRE(todd_coxeter(s3, {}, {{1}}, 100).index == 3);
  auto res = todd_coxeter(s3, {}, {}, 100);
  for (auto const& row : res.table) {
    for (auto c : row) REQUIRE(c < res.index);
  }
}

TEST_CASE("coset enumeration recovers finite groups from their tables", "[envgroup][tc][oracle]") {
  for (FiniteGroup const& G : {groups::symmetric(4), groups::quaternion(), inner_group(catalog::tetrahedron()),
                               groups::cyclic(6), groups::klein()}) {
    Presentation p = table_presentation(G);
    REQUIRE(todd_coxeter(p, {}, {}, 10000).index == G.order());
  }
}

TEST_CASE("coset enumeration honours its limit", "[envgroup][tc]") {
  Presentation free2(2);
  REQUIRE_THROWS_AS(todd_coxeter(free2, {}, {}, 50), LimitExceeded);
  REQUIRE_THROWS_AS(todd_coxeter(enveloping_presentation(catalog::transpositions(3)), {}, {}, 200), BoundExceeded);
  REQUIRE_THROWS_AS(todd_coxeter(free2, {}, {}, 0), ValidationError);
}

TEST_CASE("covering lattices of example surjections", "[envgroup][covering]") {
  struct Case {
    std::string name;
    std::size_t coverings;
  };
  for (auto const& c : std::vector<Case>{{"c4-c2", 2}, {"c6-c2", 2}, {"c6-c3", 2}, {"s3-c2", 1}, {"q8-v4", 2}}) {
    INFO(c.name);
    GroupHom f = example_surjection(c.name);
    auto L = covering_lattice(f);
    REQUIRE(L.coverings.size() == c.coverings);
    std::size_t H = f.source.order();
    REQUIRE(L.N.size() * f.target.order() == H);
    for (auto const& cov : L.coverings) {
      REQUIRE(cov.group.order() * cov.M.size() == H);
      REQUIRE(L.N.size() % cov.M.size() == 0);
      REQUIRE(cov.M.size() % L.NH.size() == 0);
      REQUIRE(group::is_normal(f.source, cov.M));
      REQUIRE_NOTHROW(hom_from_map(f.source, cov.group, cov.projection));
    }
    REQUIRE(L.coverings.front().M == L.NH);
    REQUIRE(L.coverings.back().M == L.N);
  }
  REQUIRE_THROWS_AS(example_surjection("c5-c1"), UnknownName);
}

TEST_CASE("[N,H] is central in H/[N,H]", "[envgroup][covering][property]") {
  for (auto const& name : {"c4-c2", "s3-c2", "q8-v4"}) {
    GroupHom f = example_surjection(name);
    auto L = covering_lattice(f);
    auto const& top = L.coverings.front();
    // The image of N in H/[N,H] commutes with everything.
    for (auto n : L.N) {
      std::size_t a = top.projection[n];
      for (std::size_t b = 0; b < top.group.order(); ++b) REQUIRE(top.group.mul(a, b) == top.group.mul(b, a));
    }
  }
}

TEST_CASE("homomorphism checks", "[envgroup][covering]") {
  FiniteGroup c4 = groups::cyclic(4), c2 = groups::cyclic(2), c3 = groups::cyclic(3);
  REQUIRE_THROWS_AS(hom_from_generators(c4, c3, {c3.generators()[0]}), NotAHomomorphism);
  GroupHom f = hom_from_generators(c4, c2, {c2.generators()[0]});
  REQUIRE(f.surjective());
  REQUIRE(f.kernel().size() == 2);
  auto bad = f.map;
  std::swap(bad[0], bad[1]);
  REQUIRE_THROWS_AS(hom_from_map(c4, c2, bad), NotAHomomorphism);
  GroupHom triv = hom_from_generators(c4, c2, {c2.identity()});
  REQUIRE_FALSE(triv.surjective());
  REQUIRE_THROWS_AS(covering_lattice(triv), ValidationError);
  REQUIRE_THROWS_AS(covering_lattice(example_surjection("q8-v4"), 4), BoundExceeded);
}
