#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starsurg/embedding.hpp"
#include "starsurg/integer.hpp"
#include "starsurg/plumbing.hpp"

namespace starsurg {

// Audit mode prunes only on squares and pairings, so the structural lemmas
// are re-derived as facts about the output. Fast mode also prunes with them.
enum class SearchMode { Audit, Fast };

struct EnumerationOptions {
  SearchMode mode = SearchMode::Audit;
  std::uint64_t node_budget = 200'000'000;
};

enum class EnumerationStatus { Complete, BudgetExhausted };

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::Complete;
  // Canonical representatives, one per class under exceptional relabeling and
  // permutation of identical arms. Sorted by N descending, then coefficients.
  std::vector<CapEmbedding> embeddings;
  std::uint64_t nodes = 0;
  // Solutions distinct up to relabeling only (before arm-symmetry merge).
  std::size_t raw_solutions = 0;

  bool complete() const { return status == EnumerationStatus::Complete; }
};

// Center is exactly h; depth-1 classes are h - sum(e); deeper classes are
// e_p - sum(e); pairings match the cap's intersection matrix; every class
// has adjunction defect 0. Throws DomainError if cap is not cap-side.
bool is_valid_embedding(const StarPlumbing& cap, const CapEmbedding& emb);

EnumerationResult enumerate(const StarPlumbing& cap, const EnumerationOptions& options = {});

// Equal up to exceptional relabeling and a permutation of arms carrying
// identical weight chains.
bool arm_equivalent(const StarPlumbing& cap, const CapEmbedding& x, const CapEmbedding& y);

// Euler characteristic of the complementary filling: 2 + N - |cap|.
int complement_euler(const StarPlumbing& cap, const CapEmbedding& emb);
// complement_euler - 1 (b_1 = b_3 = 0).
int complement_betti2(const StarPlumbing& cap, const CapEmbedding& emb);

// Sum of |coefficient| over all exceptional coefficients.
Integer multiplicity_total(const StarPlumbing& cap, const CapEmbedding& emb);

struct LemmaCheck {
  std::string lemma;  // mixing, first, consecutive, pos, share2
  bool applicable = false;
  bool passed = true;
  std::vector<std::string> witnesses;  // one per violation
};

struct StructureReport {
  std::vector<LemmaCheck> checks;
  bool all_passed() const;
  std::string summary() const;
};

// Evaluates the structural lemmas on the assignment. Does not require
// validity, so it can be used on hand-built assignments.
StructureReport check_structure(const StarPlumbing& cap, const CapEmbedding& emb);

}  // namespace starsurg
