#include "starsurg/plumbing.hpp"

#include <algorithm>
#include <sstream>

#include "starsurg/errors.hpp"
#include "starsurg/integer.hpp"

namespace starsurg {

std::string VertexId::to_string() const {
  return "vertex(" + std::to_string(arm) + "," + std::to_string(depth) + ")";
}

StarPlumbing::StarPlumbing(Weight center, std::vector<std::vector<Weight>> arms, Side side)
    : center_(center), arms_(std::move(arms)), side_(side) {
  for (const auto& arm : arms_)
    if (arm.empty()) throw DomainError("star plumbing arms must be nonempty");
  if (side_ == Side::Cap && center_ != 1)
    throw DomainError("cap-side star plumbing must have center weight +1");
}

int StarPlumbing::vertex_count() const {
  int n = 1;
  for (const auto& arm : arms_) n += static_cast<int>(arm.size());
  return n;
}

std::vector<VertexId> StarPlumbing::vertices() const {
  std::vector<VertexId> out{{0, 0}};
  for (int j = 0; j < arm_count(); ++j)
    for (int i = 1; i <= static_cast<int>(arms_[j].size()); ++i) out.push_back({j + 1, i});
  return out;
}

int StarPlumbing::index_of(VertexId v) const {
  if (v.is_center()) return 0;
  if (v.arm < 1 || v.arm > arm_count() || v.depth > static_cast<int>(arms_[v.arm - 1].size()))
    throw DomainError("no such vertex " + v.to_string());
  int idx = 1;
  for (int j = 0; j + 1 < v.arm; ++j) idx += static_cast<int>(arms_[j].size());
  return idx + v.depth - 1;
}

Weight StarPlumbing::weight(VertexId v) const {
  if (v.is_center()) return center_;
  index_of(v);
  return arms_[v.arm - 1][v.depth - 1];
}

bool StarPlumbing::adjacent(VertexId u, VertexId v) const {
  if (u.is_center() && v.is_center()) return false;
  if (u.is_center()) return v.depth == 1;
  if (v.is_center()) return u.depth == 1;
  return u.arm == v.arm && (u.depth - v.depth == 1 || v.depth - u.depth == 1);
}

bool isomorphic(const StarPlumbing& g, const StarPlumbing& h) {
  if (g.center_weight() != h.center_weight()) return false;
  auto a = g.arms();
  auto b = h.arms();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

LinearChain::LinearChain(std::vector<Weight> w) : weights(std::move(w)) {
  if (weights.empty()) throw DomainError("linear chain must be nonempty");
}

std::string LinearChain::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights[i]);
  }
  return out + ")";
}

bool is_dually_positive(const StarPlumbing& g) {
  if (g.side() == Side::Cap) throw DomainError("dual positivity is a filling-side property");
  if (g.center_weight() > -g.arm_count() - 1) return false;
  for (const auto& arm : g.arms())
    for (Weight w : arm)
      if (w > -2) return false;
  return true;
}

int euler_characteristic(const StarPlumbing& g) { return 1 + g.vertex_count(); }

IntMatrix intersection_matrix(const StarPlumbing& g) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  IntMatrix m(n, std::vector<Weight>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = g.weight(verts[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.adjacent(verts[i], verts[j])) m[i][j] = 1;
  }
  return m;
}

IntMatrix intersection_matrix(const LinearChain& c) {
  const std::size_t n = c.weights.size();
  IntMatrix m(n, std::vector<Weight>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = c.weights[i];
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
  }
  return m;
}

bool is_negative_definite(const IntMatrix& m) {
  // Fraction-free Gaussian elimination; the k-th pivot is the k-th leading
  // principal minor.
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Integer& minor = a[k][k];
    // sign of the (k+1)-th minor must be (-1)^(k+1)
    if (minor == 0) return false;
    if ((k % 2 == 0) != (minor < 0)) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

bool is_negative_definite(const StarPlumbing& g) { return is_negative_definite(intersection_matrix(g)); }
bool is_negative_definite(const LinearChain& c) { return is_negative_definite(intersection_matrix(c)); }

StarPlumbing make_P(int a, int b) {
  if (a < 2 || b < 2) throw DomainError("make_P requires a, b >= 2");
  std::vector<std::vector<Weight>> arms;
  for (int i = 0; i < a; ++i) arms.emplace_back(b - 1, -2);
  for (int i = 0; i < b; ++i) arms.emplace_back(a - 1, -2);
  return StarPlumbing(-(a + b + 2), std::move(arms), Side::Filling);
}

StarPlumbing make_DGamma(int a, int b) {
  if (a < 2 || b < 2) throw DomainError("make_DGamma requires a, b >= 2");
  std::vector<std::vector<Weight>> arms;
  for (int i = 0; i < a; ++i) arms.push_back({-b});
  arms.push_back({-1});
  for (int i = 0; i < b; ++i) arms.push_back({-a});
  return StarPlumbing(1, std::move(arms), Side::Cap);
}

namespace {

Weight parse_weight(const std::string& tok, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed weight '" + tok + "'", line);
  }
  if (used != tok.size()) throw ParseError("malformed weight '" + tok + "'", line);
  return v;
}

struct PendingGraph {
  bool has_center = false;
  Weight center = 0;
  std::vector<std::vector<Weight>> arms;
  Side side = Side::Unspecified;
  int line = 0;
};

StarPlumbing finish(const PendingGraph& p) {
  Side side = p.side;
  if (side == Side::Unspecified) side = p.center == 1 ? Side::Cap : Side::Filling;
  try {
    return StarPlumbing(p.center, p.arms, side);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), p.line);
  }
}

}  // namespace

std::vector<StarPlumbing> parse_graphs(std::string_view text) {
  std::vector<StarPlumbing> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  PendingGraph cur;
  Side pending_side = Side::Unspecified;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (keyword == "side") {
      if (toks.size() != 1) throw ParseError("side takes one argument", line_no);
      Side s;
      if (toks[0] == "cap")
        s = Side::Cap;
      else if (toks[0] == "filling")
        s = Side::Filling;
      else
        throw ParseError("unknown side '" + toks[0] + "'", line_no);
      if (cur.has_center && cur.side == Side::Unspecified && cur.arms.empty())
        cur.side = s;
      else
        pending_side = s;
    } else if (keyword == "center") {
      if (toks.size() != 1) throw ParseError("center takes one weight", line_no);
      if (cur.has_center) out.push_back(finish(cur));
      cur = PendingGraph{};
      cur.has_center = true;
      cur.center = parse_weight(toks[0], line_no);
      cur.side = pending_side;
      cur.line = line_no;
      pending_side = Side::Unspecified;
    } else if (keyword == "arm") {
      if (!cur.has_center) throw ParseError("arm before center", line_no);
      if (toks.empty()) throw ParseError("arm needs at least one weight", line_no);
      std::vector<Weight> arm;
      for (const auto& t : toks) arm.push_back(parse_weight(t, line_no));
      cur.arms.push_back(std::move(arm));
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no);
    }
  }
  if (cur.has_center) out.push_back(finish(cur));
  return out;
}

StarPlumbing parse_graph(std::string_view text) {
  auto graphs = parse_graphs(text);
  if (graphs.size() != 1)
    throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

std::string format_graph(const StarPlumbing& g) {
  std::ostringstream os;
  if (g.side() == Side::Cap)
    os << "side cap\n";
  else if (g.side() == Side::Filling)
    os << "side filling\n";
  os << "center " << g.center_weight() << "\n";
  for (const auto& arm : g.arms()) {
    os << "arm";
    for (Weight w : arm) os << ' ' << w;
    os << "\n";
  }
  return os.str();
}

}  // namespace starsurg
