#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace starsurg {

using Weight = std::int64_t;
using IntMatrix = std::vector<std::vector<Weight>>;

enum class Side { Unspecified, Filling, Cap };

// (arm, depth) address of a star vertex. The center is (0, 0); arms are
// numbered from 1 and depth 1 is the vertex adjacent to the center.
struct VertexId {
  int arm = 0;
  int depth = 0;

  bool is_center() const { return depth == 0; }
  auto operator<=>(const VertexId&) const = default;
  std::string to_string() const;
};

class StarPlumbing {
 public:
  StarPlumbing() = default;
  StarPlumbing(Weight center, std::vector<std::vector<Weight>> arms, Side side = Side::Unspecified);

  Weight center_weight() const { return center_; }
  const std::vector<std::vector<Weight>>& arms() const { return arms_; }
  int arm_count() const { return static_cast<int>(arms_.size()); }
  Side side() const { return side_; }
  void set_side(Side s) { side_ = s; }

  int vertex_count() const;

  // Canonical vertex order: center, then each arm outward.
  std::vector<VertexId> vertices() const;
  int index_of(VertexId v) const;
  Weight weight(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;

  // Exact equality: same weights, same arm order.
  bool operator==(const StarPlumbing& other) const {
    return center_ == other.center_ && arms_ == other.arms_;
  }

 private:
  Weight center_ = 0;
  std::vector<std::vector<Weight>> arms_;
  Side side_ = Side::Unspecified;
};

// Same center weight and the same multiset of arms.
bool isomorphic(const StarPlumbing& g, const StarPlumbing& h);

struct LinearChain {
  std::vector<Weight> weights;

  LinearChain() = default;
  explicit LinearChain(std::vector<Weight> w);
  bool operator==(const LinearChain&) const = default;
  auto operator<=>(const LinearChain&) const = default;
  std::string to_string() const;
};

// center <= -(#arms) - 1 and every arm weight <= -2. Throws DomainError on a
// cap-side graph.
bool is_dually_positive(const StarPlumbing& g);

// 1 + number of vertices: b_0 = 1 and b_2 = number of spheres.
int euler_characteristic(const StarPlumbing& g);

IntMatrix intersection_matrix(const StarPlumbing& g);
IntMatrix intersection_matrix(const LinearChain& c);

// Leading principal minors alternate in sign starting negative (exact).
bool is_negative_definite(const IntMatrix& m);
bool is_negative_definite(const StarPlumbing& g);
bool is_negative_definite(const LinearChain& c);

// Filling graph of the family: center -(a+b+2), a arms of (b-1) twos and b
// arms of (a-1) twos.
StarPlumbing make_P(int a, int b);

// Cap graph of the family: center +1 with leaves -b (a times), -1, -a (b times).
StarPlumbing make_DGamma(int a, int b);

// Graph text format:
//   # comment
//   side filling        (optional; cap | filling)
//   center -6
//   arm -2 -2
// A new "center" line starts a new graph.
std::vector<StarPlumbing> parse_graphs(std::string_view text);
StarPlumbing parse_graph(std::string_view text);
std::string format_graph(const StarPlumbing& g);

}  // namespace starsurg
