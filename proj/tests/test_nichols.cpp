#include <random>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rackhopf/braiding/orbits.hpp"
#include "rackhopf/group/presentation.hpp"
#include "rackhopf/nichols/minimal.hpp"
#include "rackhopf/nichols/symmetrizer.hpp"
#include "rackhopf/rack/catalog.hpp"

using namespace rackhopf;

namespace {

BraidedSpace space(std::string const& rack, Cocycle q) { return BraidedSpace(catalog::by_name(rack), std::move(q)); }
BraidedSpace minus_one(std::string const& rack) {
  Rack r = catalog::by_name(rack);
  std::size_t n = r.size();
  return BraidedSpace(std::move(r), cocycles::minus_one(n));
}
BraidedSpace rank_one(unsigned m) { return BraidedSpace(catalog::abelian(1), Cocycle(m, {{1}})); }

Monomial apply_all(BraidedSpace const& V, Word const& w, std::vector<std::uint8_t> const& steps) {
  Monomial m{w, 0};
  apply_steps(V, m, steps);
  return m;
}

}  // namespace

TEST_CASE("tensor basis indexes words lexicographically", "[nichols]") {
  TensorBasis tb(3, 4);
  REQUIRE(tb.size() == 81);
  for (std::size_t k = 0; k < tb.size(); ++k) REQUIRE(tb.index(tb.word(k)) == k);
  REQUIRE(tb.word(5) == Word{0, 0, 1, 2});
  REQUIRE_THROWS_AS(TensorBasis(10, 8, 1000), BoundExceeded);
}

TEST_CASE("Matsumoto lifts are reduced words of the permutation", "[nichols][matsumoto]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    Perm p = perm::identity(n);
    do {
      auto steps = matsumoto::application_order(p);
      REQUIRE(steps.size() == matsumoto::inversions(p));
      Perm s = p;
      for (auto i : steps) std::swap(s[i], s[i + 1]);
      REQUIRE(perm::is_identity(s));
      auto lift = matsumoto_lift(p);
      REQUIRE(lift.size() == steps.size());
      for (std::size_t k = 0; k < lift.size(); ++k) REQUIRE(lift[k] == steps[steps.size() - 1 - k] + 1);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  REQUIRE_THROWS_AS(matsumoto_lift(perm::identity(9)), BoundExceeded);
  REQUIRE_THROWS_AS(matsumoto_lift(Perm{0, 0, 1}), ValidationError);
}

TEST_CASE("braid lift does not depend on the reduced word", "[nichols][matsumoto][property]") {
  std::mt19937 rng(101);
  std::vector<BraidedSpace> spaces = {space("transpositions:4", cocycles::chi(catalog::transpositions(4))),
                                      minus_one("tetrahedron"), space("affine:5,2", Cocycle::constant(5, 6, 1)),
                                      space("abelian:2", Cocycle(5, {{1, 4}, {0, 1}}))};
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 4;
    Perm sigma = perm::identity(n);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto canonical = matsumoto::application_order(sigma);
    auto other = matsumoto::random_application_order(sigma, rng);
    REQUIRE(other.size() == canonical.size());
    BraidedSpace const& V = spaces[trial % spaces.size()];
    Word w(n);
    for (auto& l : w) l = static_cast<std::uint32_t>(rng() % V.dimension());
    REQUIRE(apply_all(V, w, canonical) == apply_all(V, w, other));
  }
}

TEST_CASE("Hilbert series of transpositions(3) with q = -1", "[nichols][oracle]") {
  BraidedSpace V = minus_one("transpositions:3");
  auto rep = hilbert_series(V, 6);
  REQUIRE(rep.dims == std::vector<std::size_t>{1, 3, 4, 3, 1, 0, 0});
  REQUIRE(rep.total() == 12);
  REQUIRE(rep.first_zero == 5u);
  for (std::size_t n = 0; n <= 5; ++n) {
    INFO("degree " << n);
    REQUIRE(oracle::symmetrizer_rank_rational(V.rack(), V.cocycle(), n) == rep.dims[n]);
  }
  REQUIRE(oracle::symmetrizer_rank_mod_p(V.rack(), V.cocycle(), 6) == 0);
}

TEST_CASE("rank one: dims are 1 below the order of q and 0 at it", "[nichols][oracle]") {
  for (unsigned m : {2u, 3u, 4u}) {
    auto rep = hilbert_series(rank_one(m), m + 1);
    for (std::size_t n = 0; n <= m + 1; ++n) {
      REQUIRE(rep.dims[n] == oracle::rank_one_dim(m, n));
      REQUIRE(rep.dims[n] == oracle::symmetrizer_rank_mod_p(catalog::abelian(1), Cocycle(m, {{1}}), n));
    }
    REQUIRE(rep.first_zero == std::optional<std::size_t>(m));
  }
}

TEST_CASE("symmetrizer rank agrees with the dense oracle", "[nichols][oracle]") {
  struct Case {
    BraidedSpace V;
    std::size_t max_degree;
  };
  std::vector<Case> cases = {{space("transpositions:3", cocycles::chi(catalog::transpositions(3))), 4},
                             {space("transpositions:3", Cocycle::constant(3, 6, 1)), 4},
                             {minus_one("tetrahedron"), 3},
                             {minus_one("transpositions:4"), 3},
                             {minus_one("reflections_D4"), 3},
                             {space("abelian:2", Cocycle(5, {{1, 4}, {0, 1}})), 5},
                             {space("abelian:2", Cocycle(3, {{1, 1}, {0, 1}})), 5}};
  for (auto const& c : cases) {
    for (std::size_t n = 0; n <= c.max_degree; ++n) {
      INFO(c.V.rack().label() << " degree " << n);
      REQUIRE(symmetrizer_rank(c.V, n) == oracle::symmetrizer_rank_mod_p(c.V.rack(), c.V.cocycle(), n));
    }
  }
}

TEST_CASE("dim B(V)(2) = d^2 - #QR", "[nichols][quadratic]") {
  std::vector<BraidedSpace> spaces = {minus_one("transpositions:3"),
                                      space("transpositions:3", cocycles::chi(catalog::transpositions(3))),
                                      minus_one("transpositions:4"),
                                      minus_one("transpositions:5"),
                                      minus_one("four_cycles_S4"),
                                      minus_one("tetrahedron"),
                                      minus_one("affine:5,2"),
                                      minus_one("affine:7,5"),
                                      minus_one("reflections_D4"),
                                      space("abelian:2", Cocycle(3, {{1, 1}, {0, 1}}))};
  for (auto const& V : spaces) {
    INFO(V.rack().label());
    auto qa = quadratic_analysis(V);
    REQUIRE(symmetrizer_rank(V, 2) == V.dimension() * V.dimension() - qa.relations);
  }
}

TEST_CASE("bound on the tensor basis yields partial Hilbert series", "[nichols]") {
  SymmetrizerLimits lim;
  lim.max_columns = 300;
  try {
    hilbert_series(minus_one("transpositions:4"), 5, lim);
    FAIL("expected a bound");
  } catch (HilbertBoundExceeded const& e) {
    REQUIRE(e.partial.dims == std::vector<std::size_t>{1, 6, 19, 42});
  }
}

TEST_CASE("minimal elements in degree 2 for transpositions(3)", "[nichols][minimal]") {
  BraidedSpace V = minus_one("transpositions:3");
  auto rep = minimal_elements(V, 2);
  REQUIRE(rep.minimal.size() == 6);
  REQUIRE(rep.units.empty());
  for (auto const& m : rep.minimal) {
    REQUIRE(m.support.size() == 2);
    REQUIRE(m.representative.nnz() == 2);
  }
  // x1 x2 + ... : the two words of a support lie in one orbit of c.
  Rack const& r = V.rack();
  for (auto const& m : rep.minimal) {
    Word a = m.support[0], b = m.support[1];
    bool linked = (b == Word{r.op(a[0], a[1]), a[0]}) || (a == Word{r.op(b[0], b[1]), b[0]});
    REQUIRE(linked);
  }
  // Each minimal element lies in the image of the symmetrizer.
  TensorBasis tb(3, 2);
  SymmetrizerPlan plan(2);
  EchelonBasis image(V.order());
  for (std::size_t w = 0; w < tb.size(); ++w) image.insert(symmetrized_word(V, plan, tb, tb.word(w)));
  for (auto const& m : rep.minimal) REQUIRE(image.contains(m.representative));
}

TEST_CASE("rank one: every word is a unit below the order of q", "[nichols][minimal]") {
  auto rep = minimal_elements(rank_one(3), 2);
  REQUIRE(rep.minimal.empty());
  REQUIRE(rep.units == std::vector<Word>{{0, 0}});
  REQUIRE(minimal_elements(rank_one(2), 2).units.empty());
}

TEST_CASE("degree-2 relators reproduce the enveloping presentation", "[nichols][relators]") {
  Rack r = catalog::transpositions(3);
  auto cr = covering_relators(BraidedSpace(r, cocycles::chi(r)), 2);
  REQUIRE(cr.by_degree.size() == 1);
  REQUIRE(cr.presentation.canonical_relators() == enveloping_presentation(r).canonical_relators());
  auto cm = covering_relators(minus_one("transpositions:4"), 2);
  REQUIRE(cm.presentation.canonical_relators() == enveloping_presentation(catalog::transpositions(4)).canonical_relators());
}

TEST_CASE("rank one with q of order at least 3 has no degree-2 relators", "[nichols][relators]") {
  for (unsigned m : {3u, 4u, 5u}) {
    auto cr = covering_relators(rank_one(m), 2);
    REQUIRE(cr.by_degree[0].relators.empty());
    REQUIRE(abelianization(cr.presentation).free_rank == 1);
  }
}

TEST_CASE("minimal elements are homogeneous for the enveloping group invariants", "[nichols][property]") {
  REQUIRE(grading_consistency(minus_one("transpositions:3"), 4).ok);
  auto g = grading_consistency(space("transpositions:4", cocycles::chi(catalog::transpositions(4))), 3);
  REQUIRE(g.ok);
  REQUIRE(g.elements_checked > 0);
  REQUIRE(grading_consistency(space("abelian:2", Cocycle(5, {{1, 4}, {0, 1}})), 4).ok);
  // A support mixing words of different abelian degree is caught.
  auto bad = grading_consistency(catalog::abelian(2), {{{0, 0}, {0, 1}}});
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.witness->invariant == "abelianization");
  auto bad_inner = grading_consistency(catalog::transpositions(3), {{{0, 1}, {1, 0}}});
  REQUIRE_FALSE(bad_inner.ok);
  REQUIRE(bad_inner.witness->invariant == "inner group");
}
