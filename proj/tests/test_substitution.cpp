#include <random>

#include "doctest.h"
#include "starsurg/errors.hpp"
#include "starsurg/substitution.hpp"

using namespace starsurg;

namespace {

// Random adjacent transpositions of commuting twists.
Factorization shuffle_commuting(const Factorization& f, std::mt19937& rng, int moves) {
  std::vector<ConvexTwist> w = f.expanded().word();
  if (w.size() < 2) return f;
  for (int i = 0; i < moves; ++i) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, w.size() - 2)(rng);
    if (twists_commute(w[k].holes, w[k + 1].holes, f.holes())) std::swap(w[k], w[k + 1]);
  }
  return Factorization(f.holes(), w);
}

std::vector<Rewrite> lantern_and_daisies(int p) {
  auto rules = rule_set("lantern");
  for (auto& r : rule_set("daisy", p)) rules.push_back(r);
  return rules;
}

}  // namespace

TEST_CASE("rewrites are verified at load") {
  CHECK_NOTHROW(make_rewrite(lantern({1}, {2}, {3})));
  const Relation l = lantern({1}, {2}, {3});
  Factorization wrong(3, {ConvexTwist({1, 3}), ConvexTwist({1, 2}), ConvexTwist({2, 3})});
  CHECK_THROWS_AS(make_rewrite("bogus", l.lhs, wrong), DomainError);
  Factorization negative(3, {ConvexTwist({1}, -1)});
  CHECK_THROWS_AS(make_rewrite("neg", negative, negative), DomainError);
  CHECK(reversed(reversed(make_rewrite(l))).name == "lantern");
  CHECK_THROWS_AS(rule_set("nonsense"), DomainError);
  CHECK(rule_set("daisy", 5).size() == 4);
}

TEST_CASE("occurrences of the lantern") {
  const Rewrite lan = rule_set("lantern")[0];
  const OccurrenceSearch in_f = find_occurrences(F_factorization(1, 1), lan);
  CHECK(in_f.status == SearchStatus::Complete);
  std::size_t identity = 0;
  for (const auto& o : in_f.occurrences) identity += o.injection == std::vector<int>{1, 2, 3};
  CHECK(identity == 1);
  CHECK(find_occurrences(G_factorization(1, 1), lan).occurrences.empty());
  const Rewrite daisy2 = rule_set("daisy", 2)[0];
  CHECK(find_occurrences(F_factorization(1, 1), daisy2).occurrences == in_f.occurrences);
}

TEST_CASE("occurrences need commutations, not just subsequences") {
  // phi{1,2,3} phi{1} phi{2} phi{1,2} phi{3}: the phi{3} letter commutes past
  // phi{1,2}, so the lantern window can be formed.
  const Factorization f(3, {ConvexTwist({1, 2, 3}), ConvexTwist({1}), ConvexTwist({2}), ConvexTwist({1, 2}),
                            ConvexTwist({3})});
  const Rewrite lan = rule_set("lantern")[0];
  const auto found = find_occurrences(f, lan);
  bool identity = false;
  for (const auto& o : found.occurrences)
    if (o.injection == std::vector<int>{1, 2, 3}) {
      identity = true;
      const Factorization g = apply(f, o, lan);
      CHECK(equal(f, g));
    }
  CHECK(identity);
}

TEST_CASE("applying the lantern substitution") {
  const Rewrite lan = rule_set("lantern")[0];
  const Factorization f = F_factorization(1, 1);
  for (const auto& o : find_occurrences(f, lan).occurrences) {
    const Factorization g = apply(f, o, lan);
    CHECK(equal(f, g));
    if (o.injection == std::vector<int>{1, 2, 3}) CHECK(commutation_equivalent(g, G_factorization(1, 1)));
    // Reverse it again.
    const Rewrite back = reversed(lan);
    bool returned = false;
    for (const auto& o2 : find_occurrences(g, back).occurrences)
      returned = returned || commutation_equivalent(apply(g, o2, back), f);
    CHECK(returned);
  }
  Occurrence bogus{{1, 2, 3}, {0, 1, 2, 2}};
  CHECK_THROWS_AS(apply(f, bogus, lan), DomainError);
  Occurrence out_of_range{{1, 2, 9}, {0, 1, 2, 3}};
  CHECK_THROWS_AS(apply(f, out_of_range, lan), DomainError);
}

TEST_CASE("substitution preserves the monodromy on larger words") {
  const auto rules = lantern_and_daisies(4);
  const Relation gl = generalized_lantern(4);
  for (const auto& r : rules)
    for (const auto& o : find_occurrences(gl.lhs, r).occurrences) CHECK(equal(apply(gl.lhs, o, r, false), gl.lhs));
}

TEST_CASE("canonical form is invariant under commuting shuffles") {
  std::mt19937 rng(5);
  const std::vector<Factorization> words{F_factorization(2, 2), G_factorization(2, 3), generalized_lantern(5).rhs,
                                         daisy({{1}, {2}, {3}, {4}}).lhs};
  for (const auto& w : words) {
    const Factorization c = canonical_form(w);
    CHECK(canonical_form(c) == c);
    CHECK(equal(c, w));
    for (int i = 0; i < 20; ++i) CHECK(canonical_form(shuffle_commuting(w, rng, 50)) == c);
  }
  CHECK_FALSE(commutation_equivalent(lantern({1}, {2}, {3}).rhs,
                                     Factorization(3, {ConvexTwist({1, 3}), ConvexTwist({1, 2}), ConvexTwist({2, 3})})));
}

TEST_CASE("reachability") {
  const Rewrite lan = rule_set("lantern")[0];
  const ReachResult one = reachable(F_factorization(1, 1), G_factorization(1, 1), {lan});
  CHECK(one.reached);
  CHECK(one.path.size() == 1);

  const Relation gl = generalized_lantern(4);
  const ReachResult r = reachable(gl.lhs, gl.rhs, rule_set("daisy", 4));
  CHECK(r.reached);
  for (const auto& s : r.path) CHECK(equal(s.word, gl.lhs));
  CHECK(commutation_equivalent(r.path.back().word, gl.rhs));

  const ReachResult back = reachable(gl.rhs, gl.lhs, rule_set("daisy", 4));
  CHECK(back.reached);

  ReachOptions opts;
  opts.max_depth = 6;
  opts.max_states = 100000;
  const ReachResult fg = reachable(F_factorization(2, 2), G_factorization(2, 2), lantern_and_daisies(4), opts);
  CHECK_FALSE(fg.reached);
  CHECK(fg.summary().find("not a proof") != std::string::npos);
  const ReachResult gf = reachable(G_factorization(2, 2), F_factorization(2, 2), lantern_and_daisies(4), opts);
  CHECK_FALSE(gf.reached);
}

TEST_CASE("reachability is symmetric on small instances") {
  const auto rules = lantern_and_daisies(3);
  const std::vector<std::pair<Factorization, Factorization>> pairs{
      {F_factorization(1, 1), G_factorization(1, 1)},
      {generalized_lantern(4).lhs, generalized_lantern(4).rhs},
      {F_factorization(2, 1), G_factorization(2, 1)},
      {F_factorization(1, 2), G_factorization(1, 2)}};
  for (const auto& [f, g] : pairs) CHECK(reachable(f, g, rules).reached == reachable(g, f, rules).reached);
}

TEST_CASE("reachability errors and budgets") {
  const auto rules = rule_set("lantern");
  CHECK_THROWS_AS(reachable(F_factorization(1, 1), Factorization(3, {ConvexTwist({1})}), rules), MonodromyMismatch);
  ReachOptions bad;
  bad.max_depth = -1;
  CHECK_THROWS_AS(reachable(F_factorization(1, 1), G_factorization(1, 1), rules, bad), DomainError);
  ReachOptions zero;
  zero.max_depth = 0;
  const ReachResult r = reachable(F_factorization(1, 1), G_factorization(1, 1), rules, zero);
  CHECK_FALSE(r.reached);
  CHECK(r.depth_limited);
  ReachOptions tiny;
  tiny.max_states = 1;
  const ReachResult s = reachable(F_factorization(1, 1), G_factorization(1, 1), rules, tiny);
  CHECK_FALSE(s.reached);
  CHECK(s.state_limited);
}

TEST_CASE("Hurwitz moves never leave the convex alphabet") {
  for (int n = 3; n <= 4; ++n) {
    std::vector<ConvexTwist> ts;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> hs;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) hs.push_back(i + 1);
      ts.emplace_back(hs);
    }
    for (const auto& a : ts)
      for (const auto& b : ts) {
        if (twists_commute(a.holes, b.holes, n)) continue;
        const MappingClassNF conj = act(Factorization(n, {ConvexTwist(b.holes, -1), a, b}));
        for (const auto& c : ts) CHECK_FALSE(conj == twist_automorphism(n, c));
      }
  }
  const Factorization start = lantern({1}, {2}, {3}).rhs;
  const Factorization rotated(3, {ConvexTwist({1, 3}), ConvexTwist({2, 3}), ConvexTwist({1, 2})});
  REQUIRE(equal(start, rotated));
  ReachOptions h;
  h.hurwitz = true;
  const ReachResult alone = reachable(start, rotated, {}, h);
  CHECK_FALSE(alone.reached);
  CHECK(alone.states == 1);
  const ReachResult with = reachable(start, rotated, rule_set("lantern"), h);
  CHECK(with.reached);
  for (const auto& s : with.path) CHECK(equal(s.word, start));
}
