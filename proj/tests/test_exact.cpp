#include <random>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rackhopf/exact/cyclotomic.hpp"
#include "rackhopf/exact/matrix.hpp"
#include "rackhopf/exact/smith.hpp"
#include "rackhopf/exact/support.hpp"

using namespace rackhopf;

namespace {

CycScalar random_scalar(std::mt19937& rng, unsigned N, int range = 3) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<std::int64_t> counts(N, 0);
  for (unsigned e = 0; e < N; ++e) counts[e] = coef(rng);
  return CycScalar::from_exponent_counts(N, counts);
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, unsigned N, double density = 0.5) {
  std::bernoulli_distribution nonzero(density);
  ExactMatrix m(r, c, N);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (nonzero(rng)) m.set(i, j, random_scalar(rng, N));
    }
  }
  return m;
}

// Rank-deficient by construction: (r x k) * (k x c).
ExactMatrix low_rank_matrix(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t k, unsigned N) {
  auto a = random_matrix(rng, r, k, N, 0.8).to_dense();
  auto b = random_matrix(rng, k, c, N, 0.8).to_dense();
  ExactMatrix m(r, c, N);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      CycScalar s = CycScalar::zero(N);
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      m.set(i, j, s);
    }
  }
  return m;
}

// Image of an element of Q(z_N) with integer coefficients in F_p.
std::uint64_t to_fp(CycScalar const& a, oracle::PrimeField const& F) {
  std::uint64_t v = 0, zpow = 1;
  for (auto const& c : a.coeffs()) {
    REQUIRE(c.get_den() == 1);
    std::int64_t n = c.get_num().get_si();
    std::uint64_t cn = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(F.p)) + static_cast<std::int64_t>(F.p)) % static_cast<std::int64_t>(F.p));
    v = (v + cn * zpow) % F.p;
    zpow = zpow * F.zeta % F.p;
  }
  return v;
}

}  // namespace

TEST_CASE("roots of unity multiply by adding exponents", "[exact][cyclotomic]") {
  for (unsigned N : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    for (std::int64_t a = -N; a <= static_cast<std::int64_t>(N); ++a) {
      for (std::int64_t b = 0; b < static_cast<std::int64_t>(N); ++b) {
        REQUIRE(CycScalar::root_of_unity(N, a) * CycScalar::root_of_unity(N, b) == CycScalar::root_of_unity(N, a + b));
      }
    }
    REQUIRE(CycScalar::root_of_unity(N, 1).pow(N).is_one());
    // 1 + z + ... + z^(N-1) = 0 for N > 1
    std::vector<std::int64_t> ones(N, 1);
    REQUIRE(CycScalar::from_exponent_counts(N, ones).is_zero() == (N > 1));
  }
}

TEST_CASE("inverse of 1 + z_5", "[exact][cyclotomic]") {
  CycScalar z = CycScalar::root_of_unity(5, 1);
  CycScalar inv = (CycScalar::one(5) + z).inverse();
  REQUIRE(inv == -(z + z.pow(3)));
  REQUIRE(((CycScalar::one(5) + z) * inv).is_one());
  REQUIRE_THROWS_AS(CycScalar::zero(5).inverse(), DivisionByZero);
}

TEST_CASE("field identities on random elements", "[exact][cyclotomic][property]") {
  std::mt19937 rng(11);
  for (unsigned N : {1u, 2u, 3u, 4u, 6u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      CycScalar a = random_scalar(rng, N), b = random_scalar(rng, N), c = random_scalar(rng, N);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE((a - a).is_zero());
      if (!a.is_zero()) {
        REQUIRE((a * a.inverse()).is_one());
        REQUIRE((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("lifting to a multiple order preserves values", "[exact][cyclotomic]") {
  REQUIRE(CycScalar::root_of_unity(3, 1).lifted(6) == CycScalar::root_of_unity(6, 2));
  REQUIRE(CycScalar::root_of_unity(2, 1).lifted(4) == CycScalar::root_of_unity(4, 2));
  REQUIRE_THROWS_AS(CycScalar::root_of_unity(4, 1).lifted(6), ValidationError);
}

TEST_CASE("rank, transpose and kernel on random matrices", "[exact][matrix][property]") {
  std::mt19937 rng(5);
  for (unsigned N : {1u, 2u, 3u, 4u, 6u}) {
    for (int trial = 0; trial < 15; ++trial) {
      std::size_t r = 2 + rng() % 5, c = 2 + rng() % 5, k = 1 + rng() % std::min(r, c);
      ExactMatrix m = trial % 2 ? low_rank_matrix(rng, r, c, k, N) : random_matrix(rng, r, c, N);
      auto rk = rank_kernel(m);
      REQUIRE(rk.rank == rank(m.transpose()));
      REQUIRE(rk.rank + rk.kernel_basis.size() == c);
      if (trial % 2) REQUIRE(rk.rank <= k);
      for (auto const& v : rk.kernel_basis) REQUIRE(m.apply(v).empty());
    }
  }
}

TEST_CASE("rank agrees with an independent elimination mod p", "[exact][matrix][oracle]") {
  std::mt19937 rng(17);
  for (unsigned N : {1u, 2u, 3u, 4u, 6u}) {
    oracle::PrimeField F(N);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t r = 3 + rng() % 4, c = 3 + rng() % 4;
      ExactMatrix m = low_rank_matrix(rng, r, c, 1 + rng() % 3, N);
      std::vector<std::vector<std::uint64_t>> a(r, std::vector<std::uint64_t>(c));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) a[i][j] = to_fp(m.get(i, j), F);
      }
      REQUIRE(rank(m) == oracle::rank_mod_p(a, F.p));
    }
  }
}

TEST_CASE("determinant agrees with cofactor expansion", "[exact][matrix][oracle]") {
  std::mt19937 rng(23);
  for (unsigned N : {1u, 3u, 4u, 6u}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      ExactMatrix m = random_matrix(rng, n, n, N, 0.7);
      REQUIRE(determinant(m) == oracle::cofactor_determinant(m.to_dense(), N));
    }
  }
  REQUIRE_THROWS_AS(determinant(ExactMatrix(2, 3)), NonSquare);
}

TEST_CASE("EchelonBasis solves for coordinates", "[exact][matrix]") {
  std::mt19937 rng(3);
  unsigned N = 3;
  EchelonBasis B(N);
  std::vector<SparseVector> inserted;
  for (int i = 0; i < 8; ++i) {
    std::vector<CycScalar> dense(6);
    for (auto& x : dense) x = random_scalar(rng, N, 1);
    SparseVector v = SparseVector::from_dense(dense);
    if (B.insert(v)) inserted.push_back(v);
  }
  REQUIRE(B.dimension() == inserted.size());
  SparseVector y;
  y.axpy(CycScalar::root_of_unity(N, 1), inserted[0]);
  y.axpy(CycScalar(2, N), inserted.back());
  auto c = B.coordinates(y);
  REQUIRE(c);
  SparseVector back;
  for (auto const& [i, v] : c->entries()) back.axpy(v, inserted[i]);
  REQUIRE(back == y);
  REQUIRE(B.contains(y));
  REQUIRE_FALSE(B.insert(y));
}

TEST_CASE("Smith normal form: U M V = D with divisibility", "[exact][smith][property]") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto& row : rows) {
      for (auto& v : row) v = coef(rng);
    }
    IntMatrix M = IntMatrix::from_rows(rows, c);
    SmithForm s = smith_normal_form(M);
    REQUIRE(s.left * M * s.right == s.diagonal);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) REQUIRE(s.diagonal(i, j) == 0);
      }
    }
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) REQUIRE(s.factors[i + 1] % s.factors[i] == 0);
    for (auto d : s.factors) REQUIRE(d > 0);
    // rank over Z equals rank over Q
    ExactMatrix q(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) q.set(i, j, CycScalar(rows[i][j]));
    }
    REQUIRE(s.factors.size() == rank(q));
    REQUIRE(s.free_rank == c - s.factors.size());
    // U and V are unimodular
    auto unimodular = [](IntMatrix const& U) {
      ExactMatrix e(U.rows(), U.cols());
      for (std::size_t i = 0; i < U.rows(); ++i) {
        for (std::size_t j = 0; j < U.cols(); ++j) e.set(i, j, CycScalar(static_cast<long>(U(i, j))));
      }
      CycScalar d = determinant(e);
      return d == CycScalar(1) || d == CycScalar(-1);
    };
    REQUIRE(unimodular(s.left));
    REQUIRE(unimodular(s.right));
  }
}

TEST_CASE("Smith normal form of known matrices", "[exact][smith]") {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3));
  REQUIRE(s.factors == std::vector<std::int64_t>{2, 6, 12});
  auto z = smith_normal_form(IntMatrix::from_rows({{1, -1}, {-1, 1}}, 2));
  REQUIRE(z.factors == std::vector<std::int64_t>{1});
  REQUIRE(z.free_rank == 1);
}

TEST_CASE("minimal supports match brute force over coordinate subsets", "[exact][support][oracle]") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k = 3 + rng() % 6, dim = 1 + rng() % (k - 1);
    std::vector<std::vector<mpq_class>> rows(dim, std::vector<mpq_class>(k));
    std::vector<SparseVector> spanning;
    std::bernoulli_distribution sparse(0.4);
    for (auto& row : rows) {
      std::vector<CycScalar> dense(k);
      for (std::size_t i = 0; i < k; ++i) {
        int v = sparse(rng) ? 0 : coef(rng);
        row[i] = v;
        dense[i] = CycScalar(v);
      }
      spanning.push_back(SparseVector::from_dense(dense));
    }
    if (oracle::rank_rational(rows) == 0) continue;
    auto got = support_minimal_vectors(spanning, k);
    std::vector<std::vector<std::size_t>> supports;
    for (auto const& m : got.minimal) supports.push_back(m.support);
    for (auto u : got.units) supports.push_back({u});
    std::sort(supports.begin(), supports.end());
    REQUIRE(supports == oracle::minimal_supports_brute(rows, k));
    for (auto const& m : got.minimal) {
      REQUIRE(m.representative.support() == m.support);
      REQUIRE(m.representative.entries().front().second.is_one());
    }
  }
}
