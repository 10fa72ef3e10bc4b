#include "starsurg/embedder.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "starsurg/errors.hpp"

namespace starsurg {

namespace {

void require_cap(const StarPlumbing& cap) {
  if (cap.center_weight() != 1 || cap.side() == Side::Filling)
    throw DomainError("expected a cap-side star plumbing with center +1");
}

// Exceptional part of one class split by sign, labels as dense integers.
struct RowShape {
  VertexId v;
  std::vector<int> pos;
  std::vector<int> neg;
  bool odd = false;  // some coefficient outside {-1, +1}
};

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

int common(const std::vector<int>& a, const std::vector<int>& b) {
  int n = 0;
  for (int x : a)
    if (contains(b, x)) ++n;
  return n;
}

bool share_any(const RowShape& a, const RowShape& b) {
  return common(a.pos, b.pos) + common(a.pos, b.neg) + common(a.neg, b.pos) + common(a.neg, b.neg) > 0;
}

std::string label_name(int x) { return "e" + std::to_string(x + 1); }

struct Violation {
  int lemma;  // index into kLemmas
  std::string witness;
};

constexpr const char* kLemmas[] = {"mixing", "first", "consecutive", "pos", "share2"};

// Lemma predicates on one unordered pair of non-center rows.
void audit_pair(const RowShape& a0, const RowShape& b0, std::vector<Violation>& out) {
  const RowShape& a = a0.v < b0.v ? a0 : b0;
  const RowShape& b = a0.v < b0.v ? b0 : a0;
  const std::string who = a.v.to_string() + " & " + b.v.to_string();
  const bool same_arm = a.v.arm == b.v.arm;
  const bool consecutive = same_arm && b.v.depth == a.v.depth + 1;

  if (a.v.depth == 1 && b.v.depth == 1) {
    int shared = common(a.neg, b.neg);
    if (shared != 1)
      out.push_back({0, who + " share " + std::to_string(shared) + " classes with coefficient -1"});
  }

  if (consecutive && a.v.depth == 1) {
    if (b.pos.size() != 1) {
      out.push_back({1, b.v.to_string() + " has " + std::to_string(b.pos.size()) + " classes with coefficient +1"});
    } else {
      const int p = b.pos[0];
      if (!contains(a.neg, p))
        out.push_back({1, who + ": " + label_name(p) + " is not -1 in the inner class"});
      int other = common(a.neg, b.neg) + common(a.pos, b.pos) + common(a.pos, b.neg);
      if (other != 0) out.push_back({1, who + " share further exceptional classes"});
    }
  }

  if (consecutive && a.v.depth >= 2) {
    if (a.pos.size() != 1 || b.pos.size() != 1) {
      out.push_back({2, who + " lack a unique +1 class"});
    } else {
      const bool out_in = contains(b.neg, a.pos[0]);
      const bool in_out = contains(a.neg, b.pos[0]);
      if (!out_in && !in_out) out.push_back({2, who + ": neither +1 class appears with -1 in the other"});
      if (a.pos[0] == b.pos[0]) out.push_back({2, who + " share their +1 class"});
      int shared = common(a.neg, b.neg);
      int expected = (out_in && in_out) ? 1 : 0;
      if (shared != expected)
        out.push_back({2, who + " share " + std::to_string(shared) + " classes with coefficient -1, expected " +
                              std::to_string(expected)});
    }
  }

  if (int shared = common(a.pos, b.pos); shared > 0)
    out.push_back({3, who + " share a class with coefficient +1"});

  if (!consecutive && !(a.v.depth == 1 && b.v.depth == 1) && share_any(a, b)) {
    const bool c1 = a.pos.size() == 1 && contains(b.neg, a.pos[0]);
    const bool c2 = b.pos.size() == 1 && contains(a.neg, b.pos[0]);
    if (!c1 && !c2) {
      out.push_back({4, who + " share a class but neither +1 class is -1 in the other"});
    } else {
      int shared = common(a.neg, b.neg);
      int expected = (c1 && c2) ? 2 : 1;
      if (shared != expected)
        out.push_back({4, who + " share " + std::to_string(shared) + " classes with coefficient -1, expected " +
                              std::to_string(expected)});
    }
  }
}

std::vector<RowShape> shapes_of(const StarPlumbing& cap, const CapEmbedding& emb) {
  std::map<ExcLabel, int> ids;
  for (const auto& c : emb.classes)
    for (const auto& [label, coeff] : c.exceptional_part()) ids.emplace(label, 0);
  int next = 0;
  for (auto& [label, id] : ids) id = next++;
  const auto verts = cap.vertices();
  std::vector<RowShape> rows;
  for (std::size_t i = 0; i < verts.size() && i < emb.classes.size(); ++i) {
    RowShape r;
    r.v = verts[i];
    for (const auto& [label, coeff] : emb.classes[i].exceptional_part()) {
      if (coeff == 1)
        r.pos.push_back(ids[label]);
      else if (coeff == -1)
        r.neg.push_back(ids[label]);
      else
        r.odd = true;
    }
    std::sort(r.pos.begin(), r.pos.end());
    std::sort(r.neg.begin(), r.neg.end());
    rows.push_back(std::move(r));
  }
  return rows;
}

// Coefficient matrix after canonical relabeling: rows = vertices, columns = e1..eN.
std::vector<std::vector<int>> coefficient_matrix(const CapEmbedding& canonical) {
  const int n = canonical.N();
  std::vector<std::vector<int>> m(canonical.classes.size(), std::vector<int>(n, 0));
  for (std::size_t r = 0; r < canonical.classes.size(); ++r)
    for (const auto& [label, coeff] : canonical.classes[r].exceptional_part())
      m[r][label.parts.at(0) - 1] = static_cast<int>(coeff);
  return m;
}

struct ArmLayout {
  std::vector<int> first_row;   // row index of depth 1 per arm
  std::vector<int> arm_class;   // smallest arm index with identical weights
};

ArmLayout layout_of(const StarPlumbing& cap) {
  ArmLayout l;
  int row = 1;
  for (int j = 0; j < cap.arm_count(); ++j) {
    l.first_row.push_back(row);
    row += static_cast<int>(cap.arms()[j].size());
    int cls = j;
    for (int i = 0; i < j; ++i)
      if (cap.arms()[i] == cap.arms()[j]) {
        cls = i;
        break;
      }
    l.arm_class.push_back(cls);
  }
  return l;
}

// Multiset of nonzero columns restricted to the given rows.
std::vector<std::vector<int>> restricted_columns(const std::vector<std::vector<int>>& m, const std::vector<int>& rows) {
  std::vector<std::vector<int>> cols;
  const std::size_t n = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<int> col;
    bool nonzero = false;
    for (int r : rows) {
      col.push_back(m[r][c]);
      nonzero = nonzero || m[r][c] != 0;
    }
    if (nonzero) cols.push_back(std::move(col));
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

class ArmMatcher {
 public:
  ArmMatcher(const StarPlumbing& cap, std::vector<std::vector<int>> x, std::vector<std::vector<int>> y)
      : cap_(cap), layout_(layout_of(cap)), x_(std::move(x)), y_(std::move(y)) {
    used_.assign(cap.arm_count(), false);
  }

  bool run() { return extend(0, {0}, {0}); }

 private:
  bool extend(int target, std::vector<int> xrows, std::vector<int> yrows) {
    if (target == cap_.arm_count()) return true;
    const auto len = static_cast<int>(cap_.arms()[target].size());
    std::vector<int> ynext = yrows;
    for (int d = 0; d < len; ++d) ynext.push_back(layout_.first_row[target] + d);
    const auto ycols = restricted_columns(y_, ynext);
    for (int src = 0; src < cap_.arm_count(); ++src) {
      if (used_[src] || layout_.arm_class[src] != layout_.arm_class[target]) continue;
      std::vector<int> xnext = xrows;
      for (int d = 0; d < len; ++d) xnext.push_back(layout_.first_row[src] + d);
      if (restricted_columns(x_, xnext) != ycols) continue;
      used_[src] = true;
      if (extend(target + 1, xnext, ynext)) return true;
      used_[src] = false;
    }
    return false;
  }

  const StarPlumbing& cap_;
  ArmLayout layout_;
  std::vector<std::vector<int>> x_, y_;
  std::vector<bool> used_;
};

// Invariant under relabeling and arm permutations; used to bucket candidates.
std::vector<std::vector<std::array<int, 3>>> orbit_signature(const StarPlumbing& cap,
                                                             const std::vector<std::vector<int>>& m) {
  const auto layout = layout_of(cap);
  const auto verts = cap.vertices();
  std::vector<std::vector<std::array<int, 3>>> sig;
  const std::size_t n = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::array<int, 3>> col;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (m[r][c] != 0) {
        int cls = verts[r].is_center() ? -1 : layout.arm_class[verts[r].arm - 1];
        col.push_back({cls, verts[r].depth, m[r][c]});
      }
    std::sort(col.begin(), col.end());
    sig.push_back(std::move(col));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// ---------------------------------------------------------------------------
// Search over column groups: labels whose coefficient columns agree on every
// row placed so far are interchangeable, so a row is chosen as a count per
// group plus a number of fresh labels. Every label-equivalence class of
// solutions is produced exactly once.

struct Group {
  std::vector<std::int8_t> col;  // entry per placed row (search order)
  int count = 0;
};

class Search {
 public:
  Search(const StarPlumbing& cap, const EnumerationOptions& opts) : cap_(cap), opts_(opts) {
    const auto verts = cap.vertices();
    // Depth-1 vertices first, then outward layer by layer.
    int max_depth = 0;
    for (const auto& v : verts) max_depth = std::max(max_depth, v.depth);
    for (int d = 0; d <= max_depth; ++d)
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i].depth == d) order_.push_back(static_cast<int>(i));
    for (int idx : order_) {
      ids_.push_back(verts[idx]);
      weights_.push_back(cap.weight(verts[idx]));
    }
  }

  void run() {
    groups_.clear();
    place(1);  // row 0 is the center, class h
  }

  std::vector<CapEmbedding> solutions;
  std::uint64_t nodes = 0;
  bool exhausted = false;

 private:
  int rows() const { return static_cast<int>(order_.size()); }
  int h_of(int row) const { return ids_[row].depth <= 1 ? 1 : 0; }

  void place(int row) {
    if (exhausted) return;
    if (row == rows()) {
      record();
      return;
    }
    const int depth = ids_[row].depth;
    need_pos_ = depth > 1 ? 1 : 0;
    const Weight need_neg = depth == 1 ? 1 - weights_[row] : -weights_[row] - 1;
    if (need_neg < 0) return;

    RowContext ctx;
    ctx.row = row;
    ctx.need_pos = need_pos_;
    ctx.need_neg = static_cast<int>(need_neg);
    for (int u = 0; u < row; ++u) {
      const int target = cap_.adjacent(ids_[u], ids_[row]) ? 1 : 0;
      ctx.want.push_back(h_of(u) * h_of(row) - target);
    }
    // Suffix bounds of the contribution sum e_u * (kpos - kneg) per prior row.
    const int G = static_cast<int>(groups_.size());
    ctx.sufmax.assign(row, std::vector<int>(G + 1, 0));
    ctx.sufmin.assign(row, std::vector<int>(G + 1, 0));
    for (int u = 0; u < row; ++u)
      for (int g = G - 1; g >= 0; --g) {
        const int e = groups_[g].col[u];
        const int negcap = std::min(groups_[g].count, ctx.need_neg);
        int mx = 0, mn = 0;
        if (e > 0) {
          mx = ctx.need_pos;
          mn = -negcap;
        } else if (e < 0) {
          mx = negcap;
          mn = -ctx.need_pos;
        }
        ctx.sufmax[u][g] = ctx.sufmax[u][g + 1] + mx;
        ctx.sufmin[u][g] = ctx.sufmin[u][g + 1] + mn;
      }
    ctx.sum.assign(row, 0);
    ctx.kpos.assign(G, 0);
    ctx.kneg.assign(G, 0);
    choose(ctx, 0, ctx.need_pos, ctx.need_neg);
  }

  struct RowContext {
    int row = 0;
    int need_pos = 0;
    int need_neg = 0;
    std::vector<int> want;
    std::vector<std::vector<int>> sufmax, sufmin;
    std::vector<int> sum;
    std::vector<int> kpos, kneg;
  };

  void choose(RowContext& ctx, int g, int posleft, int negleft) {
    if (exhausted) return;
    if (++nodes > opts_.node_budget) {
      exhausted = true;
      return;
    }
    for (int u = 0; u < ctx.row; ++u) {
      if (ctx.sum[u] + ctx.sufmax[u][g] < ctx.want[u]) return;
      if (ctx.sum[u] + ctx.sufmin[u][g] > ctx.want[u]) return;
    }
    const int G = static_cast<int>(groups_.size());
    if (g == G) {
      commit(ctx, posleft, negleft);
      return;
    }
    const Group& grp = groups_[g];
    for (int kp = 0; kp <= std::min(posleft, grp.count); ++kp) {
      const int maxneg = std::min(negleft, grp.count - kp);
      for (int kn = 0; kn <= maxneg; ++kn) {
        const int delta = kp - kn;
        if (delta != 0)
          for (int u = 0; u < ctx.row; ++u) ctx.sum[u] += grp.col[u] * delta;
        ctx.kpos[g] = kp;
        ctx.kneg[g] = kn;
        choose(ctx, g + 1, posleft - kp, negleft - kn);
        if (delta != 0)
          for (int u = 0; u < ctx.row; ++u) ctx.sum[u] -= grp.col[u] * delta;
        if (exhausted) return;
      }
    }
    ctx.kpos[g] = ctx.kneg[g] = 0;
  }

  void commit(const RowContext& ctx, int fresh_pos, int fresh_neg) {
    std::vector<Group> next;
    next.reserve(groups_.size() * 2 + 2);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      const Group& grp = groups_[g];
      const int parts[3] = {ctx.kpos[g], ctx.kneg[g], grp.count - ctx.kpos[g] - ctx.kneg[g]};
      const std::int8_t entry[3] = {1, -1, 0};
      for (int k = 0; k < 3; ++k)
        if (parts[k] > 0) {
          Group n{grp.col, parts[k]};
          n.col.push_back(entry[k]);
          next.push_back(std::move(n));
        }
    }
    if (fresh_pos > 0) {
      Group n{std::vector<std::int8_t>(ctx.row, 0), fresh_pos};
      n.col.push_back(1);
      next.push_back(std::move(n));
    }
    if (fresh_neg > 0) {
      Group n{std::vector<std::int8_t>(ctx.row, 0), fresh_neg};
      n.col.push_back(-1);
      next.push_back(std::move(n));
    }
    std::vector<Group> saved = std::move(groups_);
    groups_ = std::move(next);
    if (opts_.mode == SearchMode::Audit || lemmas_hold(ctx.row)) place(ctx.row + 1);
    groups_ = std::move(saved);
  }

  std::vector<RowShape> explicit_rows(int upto) const {
    std::vector<RowShape> rows(upto + 1);
    for (int r = 0; r <= upto; ++r) rows[r].v = ids_[r];
    int label = 0;
    for (const auto& grp : groups_) {
      for (int r = 0; r <= upto; ++r) {
        auto& dst = grp.col[r] > 0 ? rows[r].pos : rows[r].neg;
        if (grp.col[r] != 0)
          for (int k = 0; k < grp.count; ++k) dst.push_back(label + k);
      }
      label += grp.count;
    }
    for (auto& r : rows) {
      std::sort(r.pos.begin(), r.pos.end());
      std::sort(r.neg.begin(), r.neg.end());
    }
    return rows;
  }

  bool lemmas_hold(int row) const {
    const auto rows = explicit_rows(row);
    std::vector<Violation> v;
    for (int u = 1; u < row; ++u) {
      audit_pair(rows[u], rows[row], v);
      if (!v.empty()) return false;
    }
    return true;
  }

  void record() {
    CapEmbedding emb;
    emb.classes.resize(rows());
    for (int r = 0; r < rows(); ++r) emb.classes[order_[r]] = LatticeClass(h_of(r));
    int label = 1;
    for (const auto& grp : groups_)
      for (int k = 0; k < grp.count; ++k, ++label)
        for (int r = 0; r < rows(); ++r)
          if (grp.col[r] != 0) emb.classes[order_[r]].set_coefficient(ExcLabel(label), grp.col[r]);
    solutions.push_back(canonical_relabel(emb));
  }

  const StarPlumbing& cap_;
  EnumerationOptions opts_;
  std::vector<int> order_;  // search row -> vertex index
  std::vector<VertexId> ids_;
  std::vector<Weight> weights_;
  std::vector<Group> groups_;
  int need_pos_ = 0;
};

}  // namespace

bool is_valid_embedding(const StarPlumbing& cap, const CapEmbedding& emb) {
  require_cap(cap);
  const auto verts = cap.vertices();
  if (emb.classes.size() != verts.size()) return false;
  if (!(emb.classes[0] == LatticeClass::line())) return false;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const LatticeClass& c = emb.classes[i];
    const bool depth1 = verts[i].depth == 1;
    if (c.h() != (depth1 ? 1 : 0)) return false;
    int plus = 0;
    for (const auto& [label, coeff] : c.exceptional_part()) {
      if (coeff == 1)
        ++plus;
      else if (coeff != -1)
        return false;
    }
    if (plus != (depth1 ? 0 : 1)) return false;
    if (adjunction_defect(c) != 0) return false;
  }
  const IntMatrix q = intersection_matrix(cap);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i; j < verts.size(); ++j)
      if (pairing(emb.classes[i], emb.classes[j]) != q[i][j]) return false;
  return true;
}

bool arm_equivalent(const StarPlumbing& cap, const CapEmbedding& x, const CapEmbedding& y) {
  if (x.classes.size() != y.classes.size() || x.classes.size() != static_cast<std::size_t>(cap.vertex_count()))
    return false;
  const CapEmbedding cx = canonical_relabel(x), cy = canonical_relabel(y);
  if (cx.N() != cy.N()) return false;
  for (std::size_t r = 0; r < cx.classes.size(); ++r)
    if (cx.classes[r].h() != cy.classes[r].h()) return false;
  auto mx = coefficient_matrix(cx), my = coefficient_matrix(cy);
  if (orbit_signature(cap, mx) != orbit_signature(cap, my)) return false;
  return ArmMatcher(cap, std::move(mx), std::move(my)).run();
}

EnumerationResult enumerate(const StarPlumbing& cap, const EnumerationOptions& options) {
  require_cap(cap);
  Search search(cap, options);
  search.run();

  EnumerationResult result;
  result.nodes = search.nodes;
  result.status = search.exhausted ? EnumerationStatus::BudgetExhausted : EnumerationStatus::Complete;
  result.raw_solutions = search.solutions.size();

  // Merge arm-symmetric solutions; keep the lexicographically least member.
  struct Cls {
    std::vector<std::vector<int>> key;
    CapEmbedding rep;
  };
  std::map<std::pair<int, std::vector<std::vector<std::array<int, 3>>>>, std::vector<Cls>> buckets;
  for (auto& sol : search.solutions) {
    auto m = coefficient_matrix(sol);
    auto bucket_key = std::make_pair(sol.N(), orbit_signature(cap, m));
    auto& bucket = buckets[bucket_key];
    bool merged = false;
    for (auto& cls : bucket) {
      if (ArmMatcher(cap, m, cls.key).run()) {
        if (m < cls.key) {
          cls.key = m;
          cls.rep = sol;
        }
        merged = true;
        break;
      }
    }
    if (!merged) bucket.push_back({std::move(m), std::move(sol)});
  }
  std::vector<Cls> all;
  for (auto& [k, bucket] : buckets)
    for (auto& cls : bucket) all.push_back(std::move(cls));
  std::sort(all.begin(), all.end(), [](const Cls& a, const Cls& b) {
    const int na = a.rep.N(), nb = b.rep.N();
    if (na != nb) return na > nb;
    return a.key < b.key;
  });
  for (auto& cls : all) result.embeddings.push_back(std::move(cls.rep));
  return result;
}

int complement_euler(const StarPlumbing& cap, const CapEmbedding& emb) {
  if (!is_valid_embedding(cap, emb)) throw DomainError("complement_euler requires a valid embedding");
  return 2 + emb.N() - cap.vertex_count();
}

int complement_betti2(const StarPlumbing& cap, const CapEmbedding& emb) {
  return complement_euler(cap, emb) - 1;
}

Integer multiplicity_total(const StarPlumbing& cap, const CapEmbedding& emb) {
  if (emb.classes.size() != static_cast<std::size_t>(cap.vertex_count()))
    throw DomainError("embedding size does not match the cap");
  Integer total = 0;
  for (const auto& c : emb.classes)
    for (const auto& [label, coeff] : c.exceptional_part()) total += coeff < 0 ? Integer(-coeff) : coeff;
  return total;
}

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

std::string StructureReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks) {
    if (!first) os << ' ';
    first = false;
    os << c.lemma << '=' << (!c.applicable ? "n/a" : c.passed ? "pass" : "FAIL");
  }
  return os.str();
}

StructureReport check_structure(const StarPlumbing& cap, const CapEmbedding& emb) {
  require_cap(cap);
  if (emb.classes.size() != static_cast<std::size_t>(cap.vertex_count()))
    throw DomainError("embedding size does not match the cap");
  const auto rows = shapes_of(cap, emb);

  StructureReport report;
  for (const char* name : kLemmas) report.checks.push_back({name, false, true, {}});

  int depth1 = 0, longest = 0;
  for (const auto& arm : cap.arms()) {
    ++depth1;
    longest = std::max(longest, static_cast<int>(arm.size()));
  }
  report.checks[0].applicable = depth1 >= 2;
  report.checks[1].applicable = longest >= 2;
  report.checks[2].applicable = longest >= 3;
  report.checks[3].applicable = longest >= 2;

  std::vector<Violation> found;
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i].v;
      const auto& b = rows[j].v;
      const bool consecutive = a.arm == b.arm && (a.depth - b.depth == 1 || b.depth - a.depth == 1);
      if (!consecutive && !(a.depth == 1 && b.depth == 1)) report.checks[4].applicable = true;
      audit_pair(rows[i], rows[j], found);
    }
  for (const auto& r : rows)
    if (r.odd) found.push_back({3, r.v.to_string() + " has a coefficient outside {-1, +1}"});
  for (auto& v : found) {
    auto& check = report.checks[v.lemma];
    check.applicable = true;
    check.passed = false;
    check.witnesses.push_back(std::move(v.witness));
  }
  return report;
}

}  // namespace starsurg
