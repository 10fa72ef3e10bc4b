#pragma once

#include <cstdint>
#include <vector>

#include "starsurg/embedding.hpp"
#include "starsurg/integer.hpp"
#include "starsurg/plumbing.hpp"

namespace starsurg {

// Hirzebruch-Jung string (a_1, ..., a_s): p/q = a_1 - 1/(a_2 - ... - 1/a_s).
// Entries are >= 2, except the bare string (1) marking a once-blown fiber.
class HJString {
 public:
  HJString() = default;
  explicit HJString(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_unit() const { return entries_.size() == 1 && entries_[0] == 1; }

  bool operator==(const HJString&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

struct Fraction {
  Integer p;
  Integer q;
  bool operator==(const Fraction&) const = default;
};

// Requires p > q >= 1 and gcd(p, q) = 1.
HJString hj_expand(const Integer& p, const Integer& q);
Fraction hj_value(const HJString& s);

// p/q -> p/(p-q). Involutive. Rejects the unit string.
HJString hj_dual(const HJString& s);

// Concave cap of a dually-positive star: center +1, dualized arms in the
// same order, then -e0-1-k padding leaves of weight -1.
StarPlumbing dual_cap(const StarPlumbing& g);

// Embedding of dual_cap(g) whose complement is the plumbing itself.
CapEmbedding canonical_embedding(const StarPlumbing& g);

}  // namespace starsurg
