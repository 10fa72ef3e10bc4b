#include <set>
#include <random>

#include "doctest.h"
#include "starsurg/errors.hpp"
#include "starsurg/mcg.hpp"

using namespace starsurg;

namespace {

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

bool automorphisms_commute(int n, const ConvexTwist& s, const ConvexTwist& t) {
  return act(Factorization(n, {s, t})) == act(Factorization(n, {t, s}));
}

// Oracle for disjointness of convex hulls of holes on a circle: the chords
// spanned by the two subsets never cross.
bool hulls_disjoint(const std::vector<int>& s, const std::vector<int>& t) {
  for (int a : s)
    for (int b : s)
      for (int c : t)
        for (int d : t) {
          if (a >= b || c >= d) continue;
          const bool c_in = a < c && c < b, d_in = a < d && d < b;
          if (c_in != d_in) return false;
        }
  for (int a : s)
    for (int c : t)
      if (a == c) return false;
  return true;
}

bool nested(const std::vector<int>& s, const std::vector<int>& t) {
  return std::includes(s.begin(), s.end(), t.begin(), t.end()) || std::includes(t.begin(), t.end(), s.begin(), s.end());
}

}  // namespace

TEST_CASE("convex twist basics") {
  const ConvexTwist t({3, 1}, 2);
  CHECK(t.holes == std::vector<int>{1, 3});
  CHECK(t.to_string() == "phi{1,3}^2");
  CHECK_THROWS_AS(ConvexTwist({}, 1), DomainError);
  CHECK_THROWS_AS(ConvexTwist({1, 1}), DomainError);
  CHECK_THROWS_AS(ConvexTwist({0}), DomainError);
  CHECK_THROWS_AS(ConvexTwist({1}, 0), DomainError);
  CHECK_THROWS_AS(Factorization(2, {ConvexTwist({3})}), DomainError);
}

TEST_CASE("single-hole twist on the one-holed disk") {
  const MappingClassNF nf = twist_automorphism(1, ConvexTwist({1}));
  REQUIRE(nf.images.size() == 2);
  CHECK(nf.images[0] == FreeWord{1, 2, 1, -2, -1});
  CHECK(nf.images[1] == FreeWord{1, 2, -1});
  CHECK_FALSE(nf.is_identity());
}

TEST_CASE("consecutive holes use plain conjugation by the increasing product") {
  const MappingClassNF nf = twist_automorphism(3, ConvexTwist({2, 3}));
  const FreeWord w{3, 4, 5, 6};
  for (int j = 3; j <= 6; ++j) {
    FreeWord expect = free_concat(free_concat(w, {j}), free_inverse(w));
    CHECK(nf.images[j - 1] == expect);
  }
  CHECK(nf.images[0] == FreeWord{1});
  CHECK(nf.images[1] == FreeWord{2});
}

TEST_CASE("action of the empty word and of inverses") {
  CHECK(act(Factorization(4)).is_identity());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const auto subs = subsets(n);
    Factorization f(n);
    for (int i = 0; i < 4; ++i) {
      int p = std::uniform_int_distribution<int>(-2, 2)(rng);
      if (p == 0) p = 1;
      f.push_back(ConvexTwist(subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)], p));
    }
    Factorization round = f;
    round.append(f.inverse());
    CHECK(act(round).is_identity());
    CHECK_NOTHROW(act_checked(f));
  }
}

TEST_CASE("faithfulness probes") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : subsets(n)) {
      std::set<MappingClassNF> seen;
      for (int p = -3; p <= 3; ++p) {
        if (p == 0) continue;
        seen.insert(act(Factorization(n, {ConvexTwist(s, p)})));
      }
      CHECK(seen.size() == 6);
      CHECK(seen.count(identity_nf(n)) == 0);
    }
}

TEST_CASE("powers agree with repeated twists") {
  const ConvexTwist t({1, 3}, 3);
  CHECK(act(Factorization(4, {t})) == act(Factorization(4, {t}).expanded()));
  CHECK(Factorization(4, {t}).expanded().length() == 3);
}

TEST_CASE("relation suite") {
  const Relation l = lantern({1}, {2}, {3});
  CHECK(equal(l.lhs, l.rhs));
  CHECK(equal(lantern({1, 2}, {3}, {4, 5}).lhs, lantern({1, 2}, {3}, {4, 5}).rhs));
  CHECK(equal(lantern({2}, {4}, {5}, 6).lhs, lantern({2}, {4}, {5}, 6).rhs));
  for (int p = 2; p <= 5; ++p) {
    std::vector<std::vector<int>> g;
    for (int i = 1; i <= p + 1; ++i) g.push_back({i});
    const Relation d = daisy(g);
    CHECK(equal(d.lhs, d.rhs));
  }
  for (int k = 3; k <= 5; ++k) {
    const Relation r = generalized_lantern(k);
    CHECK(equal(r.lhs, r.rhs));
  }
  CHECK(generalized_lantern(3).lhs.to_string() == lantern({1}, {2}, {3}).lhs.to_string());
  CHECK(generalized_lantern(3).rhs == lantern({1}, {2}, {3}).rhs);
  CHECK(daisy({{1}, {2}, {3}}).lhs == lantern({1}, {2}, {3}).lhs);
}

TEST_CASE("malformed relation groupings") {
  CHECK_THROWS_AS(lantern({1}, {1}, {2}), DomainError);
  CHECK_THROWS_AS(lantern({1, 3}, {2}, {4}), DomainError);
  CHECK_THROWS_AS(lantern({}, {1}, {2}), DomainError);
  CHECK_THROWS_AS(daisy({{1}, {2}}), DomainError);
  CHECK_THROWS_AS(generalized_lantern(2), DomainError);
  CHECK_NOTHROW(lantern({3}, {1}, {2}));  // cyclic rotation keeps counterclockwise order
  CHECK_THROWS_AS(lantern({2}, {1}, {3}), DomainError);
}

TEST_CASE("non-relations are detected") {
  CHECK_FALSE(equal(Factorization(2, {ConvexTwist({1}), ConvexTwist({2})}), Factorization(2, {ConvexTwist({1, 2})})));
  const Relation l = lantern({1}, {2}, {3});
  Factorization wrong(3, {ConvexTwist({1, 3}), ConvexTwist({1, 2}), ConvexTwist({2, 3})});
  CHECK(linking_matrix(wrong) == linking_matrix(l.rhs));
  CHECK_FALSE(equal(l.lhs, wrong));
}

TEST_CASE("boundary twist is central") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    for (const auto& s : subsets(n)) CHECK(automorphisms_commute(n, ConvexTwist(all), ConvexTwist(s)));
  }
}

TEST_CASE("commutation predicate matches the action") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& s : subsets(n))
      for (const auto& t : subsets(n)) {
        const bool pred = twists_commute(s, t, n);
        CHECK(pred == (nested(s, t) || hulls_disjoint(s, t)));
        CHECK(pred == automorphisms_commute(n, ConvexTwist(s), ConvexTwist(t)));
      }
  CHECK_FALSE(twists_commute({1, 3}, {2, 4}, 4));
  CHECK(twists_commute({1, 2}, {3, 4}, 4));
  CHECK(twists_commute({1, 4}, {2, 3}, 4));
}

TEST_CASE("linking matrices") {
  CHECK(linking_matrix(Factorization(2, {ConvexTwist({1, 2})})) == LinkingMatrix{{1, 1}, {1, 1}});
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const int holes = m + n + 1;
      LinkingMatrix want(holes, std::vector<long>(holes, 1));
      for (int i = 0; i < holes; ++i) want[i][i] = i < m ? n + 1 : (i == m ? 2 : m + 1);
      CHECK(linking_matrix(F_factorization(m, n)) == want);
      CHECK(linking_matrix(G_factorization(m, n)) == want);
    }
}

TEST_CASE("F and G factorizations") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      CHECK(F_factorization(m, n).length() == 2 * m * n + 2);
      CHECK(G_factorization(m, n).length() == m * n + 2);
      CHECK(F_factorization(m, n).length() - G_factorization(m, n).length() == m * n);
      CHECK(F_factorization(m, n).is_positive());
    }
  const Relation l = lantern({1}, {2}, {3});
  CHECK(F_factorization(1, 1) == l.lhs);
  CHECK(G_factorization(1, 1) == l.rhs);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) CHECK(verify_FG(m, n));
  CHECK(verify_FG(4, 1));
  CHECK(verify_FG(1, 4));
  CHECK_THROWS_AS(F_factorization(0, 1), DomainError);
}

TEST_CASE("G(m,1) is a daisy up to commuting disjoint twists") {
  for (int m = 2; m <= 4; ++m) {
    // Petals A_1..A_m, B and center C_1 = m+2 in the daisy; G lists the same
    // twists in a different order.
    std::vector<std::vector<int>> groups{{m + 2}};
    for (int i = 1; i <= m + 1; ++i) groups.push_back({i});
    const Relation d = daisy(groups);
    const Factorization G = G_factorization(m, 1);
    std::multiset<ConvexTwist> rhs(d.rhs.word().begin(), d.rhs.word().end()), g(G.word().begin(), G.word().end());
    CHECK(rhs == g);
    CHECK(equal(d.rhs, G));
  }
}

TEST_CASE("equal is an equivalence and stable under appending") {
  const Relation l = lantern({1}, {2}, {3}, 4);
  const Relation d = daisy({{1}, {2}, {3}, {4}});
  Factorization a = l.lhs, b = l.rhs;
  CHECK(equal(a, a));
  CHECK(equal(b, a));
  a.push_back(ConvexTwist({2, 3, 4}));
  b.push_back(ConvexTwist({2, 3, 4}));
  CHECK(equal(a, b));
  CHECK(equal(d.lhs, d.rhs));
  CHECK_THROWS_AS(equal(Factorization(3), Factorization(4)), DomainError);
}

TEST_CASE("relation pairs share linking matrices") {
  for (int k = 3; k <= 5; ++k) {
    const Relation r = generalized_lantern(k);
    CHECK(linking_matrix(r.lhs) == linking_matrix(r.rhs));
  }
}

TEST_CASE("proof replay") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 2}, {2, 1}, {3, 2}, {2, 3}}) {
    CAPTURE(m);
    CAPTURE(n);
    const ReplayTrace t = proof_replay(m, n);
    CHECK(t.success);
    const MappingClassNF target = act(F_factorization(m, n));
    for (const auto& s : t.steps) CHECK(act(s.word) == target);
    CHECK(t.steps.back().word.word() == t.f_rewritten.word());
    CHECK_FALSE(t.format().empty());
  }
  const ReplayTrace small = proof_replay(1, 1);
  CHECK(small.steps.size() <= 5);
  CHECK(small.transpositions == 0);
  // The rewritten F carries negative boundary-parallel twists.
  CHECK_FALSE(proof_replay(2, 2).f_rewritten.is_positive());
}

TEST_CASE("word-length guard") {
  Factorization f(3);
  for (int i = 0; i < 30; ++i) {
    f.push_back(ConvexTwist({1, 2}));
    f.push_back(ConvexTwist({2, 3}));
  }
  CHECK_THROWS_AS(act(f, 1000L), ResourceError);
  CHECK_NOTHROW(act(F_factorization(2, 2)));
}

TEST_CASE("factorization text format") {
  const Factorization f = parse_factorization("# lantern\nholes 4\ntwist 1,2,3\ntwist 1 ^ 2\ntwist 2,4 ^ -1\n");
  CHECK(f.holes() == 4);
  REQUIRE(f.word().size() == 3);
  CHECK(f.word()[1] == ConvexTwist({1}, 2));
  CHECK(f.word()[2] == ConvexTwist({2, 4}, -1));
  CHECK(parse_factorization(format_factorization(f)) == f);
  CHECK(parse_factorization("twist 1,3\n").holes() == 3);
  for (int m = 1; m <= 3; ++m) CHECK(parse_factorization(format_factorization(G_factorization(m, 2))) == G_factorization(m, 2));
  auto line_of = [](const char* text) {
    try {
      parse_factorization(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("holes 3\ntwist 1,x\n") == 2);
  CHECK(line_of("holes 3\ntwist 1 ^ 0\n") == 2);
  CHECK(line_of("holes 2\ntwist 1,3\n") == 2);
  CHECK(line_of("twist 1\nbogus\n") == 2);
  CHECK(line_of("holes -1\n") == 1);
}
