#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starsurg/errors.hpp"
#include "starsurg/mcg.hpp"

namespace starsurg {

// A relation used as a rewriting rule. Both sides live on the template
// surface and must be equal in the mapping class group.
struct Rewrite {
  std::string name;
  Factorization lhs;
  Factorization rhs;
};

// Verifies equal(lhs, rhs) and positivity; throws DomainError otherwise.
Rewrite make_rewrite(std::string name, Factorization lhs, Factorization rhs);
Rewrite make_rewrite(const Relation& r);
Rewrite reversed(const Rewrite& r);

// Rule sets by name: "lantern", "daisy" (p = 2..max_petals),
// "generalized-lantern" (k = 3..max_k).
std::vector<Rewrite> rule_set(const std::string& name, int max_param = 4);

struct Occurrence {
  std::vector<int> injection;          // template hole i+1 -> target hole
  std::vector<std::size_t> positions;  // letter index in the target, one per lhs letter in lhs order
  bool operator==(const Occurrence&) const = default;
  auto operator<=>(const Occurrence&) const = default;
};

enum class SearchStatus { Complete, BudgetExhausted };

struct OccurrenceSearch {
  SearchStatus status = SearchStatus::Complete;
  std::vector<Occurrence> occurrences;
  std::size_t candidates = 0;
};

// Occurrences of r.lhs in the unit-power expansion of f, up to order-preserving
// circular relabeling of holes and commutation of twists. `budget` caps the
// number of partial matches examined.
OccurrenceSearch find_occurrences(const Factorization& f, const Rewrite& r, std::size_t budget = 1'000'000);

// Replaces the occurrence by the relabeled rhs. The result is in unit powers.
// With `check`, confirms act(result) = act(f).
Factorization apply(const Factorization& f, const Occurrence& occ, const Rewrite& r, bool check = true);

// Lexicographically least word in the commutation class of f (unit powers).
Factorization canonical_form(const Factorization& f);

// Equal up to transpositions of commuting adjacent twists.
bool commutation_equivalent(const Factorization& f, const Factorization& g);

class MonodromyMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

struct ReachOptions {
  int max_depth = 6;
  std::size_t max_states = 100'000;
  bool hurwitz = false;  // also allow Hurwitz moves that keep twists convex
};

struct ReachStep {
  std::string move;  // "lantern@{1,2,3}", "daisy^-1@{...}", "hurwitz@4"
  Factorization word;
};

struct ReachResult {
  bool reached = false;
  std::vector<ReachStep> path;  // start excluded, target included
  std::size_t states = 0;       // distinct canonical words visited
  int depth = 0;                // deepest completed layer
  bool depth_limited = false;
  bool state_limited = false;
  std::string summary() const;  // states "not a proof" when exhausted
};

// Breadth-first search over commutation classes of positive words, applying
// each rule in both directions. Throws MonodromyMismatch when start and
// target differ as mapping classes.
ReachResult reachable(const Factorization& start, const Factorization& target, const std::vector<Rewrite>& rules,
                      const ReachOptions& options = {});

}  // namespace starsurg
