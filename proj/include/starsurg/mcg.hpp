#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starsurg/freegroup.hpp"

namespace starsurg {

// Disk with holes 1..n placed counterclockwise on a circle concentric with
// the boundary.
struct HoledDisk {
  int n = 1;
};

// Dehn twist about the boundary of a neighbourhood of the convex hull of the
// selected holes, raised to a nonzero power.
struct ConvexTwist {
  std::vector<int> holes;  // sorted, distinct, nonempty
  int power = 1;

  ConvexTwist() = default;
  ConvexTwist(std::vector<int> hs, int p = 1);

  bool operator==(const ConvexTwist&) const = default;
  auto operator<=>(const ConvexTwist&) const = default;
  std::string to_string() const;  // "phi{1,3}^2"
};

// Ordered product of twists; the leftmost twist is performed first.
class Factorization {
 public:
  Factorization() = default;
  Factorization(int holes, std::vector<ConvexTwist> word = {});

  int holes() const { return holes_; }
  const std::vector<ConvexTwist>& word() const { return word_; }

  void push_back(const ConvexTwist& t);
  Factorization& append(const Factorization& other);

  // Number of twists counted with |power|.
  long length() const;
  bool is_positive() const;
  // Same product written with unit powers only.
  Factorization expanded() const;
  // Inverse mapping class: reversed word, negated powers.
  Factorization inverse() const;

  bool operator==(const Factorization&) const = default;
  std::string to_string() const;

 private:
  int holes_ = 1;
  std::vector<ConvexTwist> word_;
};

// Images of the 2n doubled free generators under a planar mapping class.
// Hole i is split into punctures 2i-1 and 2i; both lie inside every convex
// curve that encloses hole i.
struct MappingClassNF {
  int holes = 0;
  std::vector<FreeWord> images;

  bool operator==(const MappingClassNF&) const = default;
  auto operator<=>(const MappingClassNF&) const = default;
  bool is_identity() const;
  long total_length() const;
};

// Default word limit of 10^6 letters, overridable through STARSURG_WORD_LIMIT.
long default_word_limit();

struct ActOptions {
  long word_limit = default_word_limit();  // total letters across images
};

MappingClassNF identity_nf(int holes);
MappingClassNF twist_automorphism(int holes, const ConvexTwist& t);

// Composite action, leftmost twist first. Throws ResourceError past the limit.
MappingClassNF act(const Factorization& f, const ActOptions& options = {});
MappingClassNF act(const Factorization& f, long word_limit);

// act(f), after confirming act(f . f^-1) is the identity.
MappingClassNF act_checked(const Factorization& f, const ActOptions& options = {});

using LinkingMatrix = std::vector<std::vector<long>>;
LinkingMatrix linking_matrix(const Factorization& f);

// Equal in the mapping class group. Requires the same hole count.
bool equal(const Factorization& f, const Factorization& g, const ActOptions& options = {});

// Convex twists commute iff their subsets are nested or disjoint with
// non-interleaved hulls.
bool twists_commute(const std::vector<int>& s, const std::vector<int>& t, int holes);

struct Relation {
  std::string name;
  Factorization lhs;
  Factorization rhs;
};

// Groups are nonempty, pairwise disjoint and counterclockwise ordered.
Relation lantern(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c, int holes = 0);
Relation daisy(const std::vector<std::vector<int>>& groups, int holes = 0);  // B_0, ..., B_p with p >= 2
Relation generalized_lantern(int k);                                       // k >= 3

// Holes A_1..A_m = 1..m, B = m+1, C_1..C_n = m+2..m+n+1.
Factorization F_factorization(int m, int n);
Factorization G_factorization(int m, int n);
bool verify_FG(int m, int n, const ActOptions& options = {});

struct ReplayStep {
  std::string description;
  Factorization word;  // unit-power letters
};

struct ReplayTrace {
  int m = 0, n = 0;
  bool success = false;
  std::vector<ReplayStep> steps;
  Factorization f_rewritten;  // F after the generalized lantern
  Factorization g_rewritten;  // G after two generalized lanterns
  std::size_t transpositions = 0;
  std::string format() const;
};

// Symbolic replay: rewrite both sides by generalized lanterns, then connect
// the results by transpositions of commuting twists. Throws DomainError on
// "no commutation path found".
ReplayTrace proof_replay(int m, int n);

// Text format: "holes N" then one "twist 1,3,4 ^ 2" per line; '#' comments.
Factorization parse_factorization(std::string_view text);
std::string format_factorization(const Factorization& f);

}  // namespace starsurg
