#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starsurg/integer.hpp"
#include "starsurg/plumbing.hpp"

namespace starsurg {

// Side of the (-1) vertex along which a blow-up is performed. L is the edge
// leaving the (-1) vertex counterclockwise.
enum class BlowupSide { L, R };

std::vector<BlowupSide> parse_sides(const std::string& text);  // "LRL"
std::string format_sides(const std::vector<BlowupSide>& sides);

// Run lengths m_1, ..., m_n of a side sequence (maximal same-side runs).
struct ParkDescriptor {
  std::vector<int> m;
};
ParkDescriptor park_descriptor(const std::vector<BlowupSide>& sides);

// Cyclic construction: one (-4) and one (-1) vertex joined by two edges;
// each step blows up an edge at the (-1) vertex; finally the (-1) vertex is
// deleted. Weights listed counterclockwise starting after the (-1) vertex.
LinearChain park_chain_recursive(const std::vector<BlowupSide>& sides);

// Chain with continued fraction p^2/(pq-1).
LinearChain park_chain_fraction(const Integer& p, const Integer& q);

// Recovers (p, q) when the chain's fraction has the form p^2/(pq-1).
struct ParkParameters {
  Integer p;
  Integer q;
};
std::optional<ParkParameters> park_parameters(const LinearChain& chain);

// (a+b) | (ab+1); equivalently (a+b) | (b^2-1).
bool divisibility_criterion(int a, int b);

// Every weight w satisfies (w + 2) = 0 mod modulus.
bool weight_filter(const std::vector<Weight>& weights, const Integer& modulus);
bool weight_filter(const LinearChain& chain, const Integer& modulus);
bool weight_filter(const StarPlumbing& star, const Integer& modulus);

enum class Outcome { RuledOut, Inconclusive };

struct FamilyCheck {
  std::string family;
  bool eliminated = false;
  std::string reason;
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  int a = 0, b = 0;
  int required_size = 0;
  std::vector<FamilyCheck> families;
  // Inconclusive only: a Park chain of the required size passing the filter.
  std::optional<LinearChain> witness;
  std::string certificate() const;
};

// Necessary-condition check for replacing P_{a,b} by the alternate filling via
// one rational blow-down. Never claims the replacement is possible.
Verdict single_blowdown_verdict(int a, int b);

const char* outcome_name(Outcome o);

}  // namespace starsurg
