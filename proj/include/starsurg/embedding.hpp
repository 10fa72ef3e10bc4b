#pragma once

#include <string>
#include <vector>

#include "starsurg/homlattice.hpp"
#include "starsurg/plumbing.hpp"

namespace starsurg {

// Homological embedding of a cap plumbing: one class per vertex, indexed in
// the cap's canonical vertex order.
struct CapEmbedding {
  std::vector<LatticeClass> classes;

  // Distinct exceptional labels with a nonzero coefficient somewhere.
  int distinct_exceptional() const;
  int N() const { return distinct_exceptional(); }

  bool operator==(const CapEmbedding&) const = default;
};

// Relabels exceptional classes as e1, e2, ... : columns of the coefficient
// matrix sorted so that labels used earlier in vertex order come first,
// ties broken lexicographically (-1 before +1 before absent).
CapEmbedding canonical_relabel(const CapEmbedding& emb);

// Same embedding up to a permutation of exceptional labels.
bool label_equivalent(const CapEmbedding& x, const CapEmbedding& y);

// Lines "vertex(arm,depth): class".
std::string format_embedding(const StarPlumbing& cap, const CapEmbedding& emb);
CapEmbedding parse_embedding(const StarPlumbing& cap, std::string_view text);

}  // namespace starsurg
