#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "starsurg/dualize.hpp"
#include "starsurg/embedder.hpp"
#include "starsurg/errors.hpp"
#include "starsurg/lefschetz.hpp"

using namespace starsurg;

namespace {

std::vector<std::vector<int>> incidence(const Factorization& f) {
  std::vector<std::vector<int>> rows;
  const Factorization e = f.expanded();
  for (const auto& t : e.word()) {
    std::vector<int> r(f.holes(), 0);
    for (int h : t.holes) r[h - 1] = 1;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("Euler characteristic of Lefschetz fibrations") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      CHECK(euler_char(G_factorization(a, b)) == a * b - a - b + 2);
      CHECK(euler_char(F_factorization(a, b)) == 2 * a * b - a - b + 2);
      CHECK(euler_char(F_factorization(a, b)) - euler_char(G_factorization(a, b)) == a * b);
    }
  CHECK(euler_char(Factorization(1)) == 0);
  CHECK_THROWS_AS(euler_char(Factorization(2, {ConvexTwist({1}, -1)})), DomainError);
}

TEST_CASE("Euler characteristics agree with plumbings and embeddings") {
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b) {
      CHECK(euler_char(F_factorization(a, b)) == euler_characteristic(make_P(a, b)));
      const auto embs = enumerate(make_DGamma(a, b)).embeddings;
      REQUIRE(embs.size() == 2);
      CHECK(euler_char(G_factorization(a, b)) == complement_euler(make_DGamma(a, b), embs[1]));
      CHECK(euler_char(F_factorization(a, b)) == complement_euler(make_DGamma(a, b), embs[0]));
    }
}

TEST_CASE("invariant factors") {
  using M = std::vector<std::vector<Integer>>;
  auto d = invariant_factors(M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(d == std::vector<Integer>{2, 6, 12});
  CHECK(invariant_factors(M{{0, 0}, {0, 0}}).empty());
  CHECK(invariant_factors(M{{6}}) == std::vector<Integer>{6});
  CHECK(invariant_factors(M{{4, 0}, {0, 6}}) == std::vector<Integer>{2, 12});
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    M m(3, std::vector<Integer>(3));
    std::vector<std::vector<int>> ints(3, std::vector<int>(3));
    std::vector<std::vector<long long>> ll(3, std::vector<long long>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ll[i][j] = ints[i][j] = static_cast<int>((m[i][j] = std::uniform_int_distribution<int>(-4, 4)(rng)));
    const auto f = invariant_factors(m);
    CHECK(static_cast<int>(f.size()) == oracle::rank_over_q(ll));
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
    // |Hom(coker, Z/k)| = prod gcd(d_i, k) * k^(3 - rank).
    for (int k : {2, 3, 4, 6}) {
      long long expect = 1;
      for (const auto& x : f) expect *= static_cast<long long>(boost::multiprecision::gcd(x, Integer(k)));
      for (std::size_t i = f.size(); i < 3; ++i) expect *= k;
      // Transpose: solutions of rows.u = 0 count Hom of Z^3 / column span.
      std::vector<std::vector<int>> rows(3, std::vector<int>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] = ints[i][j];
      CHECK(oracle::count_solutions(rows, 3, k) == expect);
    }
  }
}

TEST_CASE("first homology of the two fillings") {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b) {
      const FillingInvariants F = homology(F_factorization(a, b));
      const FillingInvariants G = homology(G_factorization(a, b));
      CHECK(F.b1 == 0);
      CHECK(F.torsion.empty());
      CHECK(G.b1 == 0);
      CHECK(G.torsion == std::vector<Integer>{a + b});
    }
}

TEST_CASE("homology agrees with counting homomorphisms to Z/k") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const Factorization G = G_factorization(a, b);
      const auto rows = incidence(G);
      const int n = G.holes();
      for (int k = 2; k <= 6; ++k) {
        const long long want = std::gcd(a + b, k);
        CHECK(oracle::count_solutions(rows, n, k) == want);
      }
      CHECK(oracle::count_solutions(incidence(F_factorization(a, b)), n, 4) == 1);
    }
}

TEST_CASE("single boundary twist leaves a free part") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    const FillingInvariants inv = homology(Factorization(n, {ConvexTwist(all)}));
    CHECK(inv.b1 == n - 1);
    CHECK(inv.torsion.empty());
  }
}

TEST_CASE("homology is invariant under commutation shuffles") {
  const Factorization g = G_factorization(2, 3);
  std::vector<ConvexTwist> w = g.word();
  std::reverse(w.begin(), w.end());
  const FillingInvariants a = homology(g), b = homology(Factorization(g.holes(), w));
  CHECK(a.b1 == b.b1);
  CHECK(a.torsion == b.torsion);
}

TEST_CASE("boundary open books") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(boundary_open_book_equal(F_factorization(a, b), G_factorization(a, b)));
  Factorization longer = F_factorization(2, 2);
  longer.push_back(ConvexTwist({1, 2}));
  CHECK_FALSE(boundary_open_book_equal(F_factorization(2, 2), longer));
  std::vector<ConvexTwist> w = F_factorization(2, 2).word();
  std::swap(w[1], w[2]);
  CHECK(boundary_open_book_equal(F_factorization(2, 2), Factorization(5, w)));
  CHECK_THROWS_AS(boundary_open_book_equal(Factorization(2), Factorization(3)), DomainError);
}
