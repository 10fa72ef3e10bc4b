#include "starsurg/substitution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace starsurg {

namespace {

using Letters = std::vector<ConvexTwist>;

Letters unit_letters(const Factorization& f) {
  if (!f.is_positive()) throw DomainError("expected a positive factorization: " + f.to_string());
  return f.expanded().word();
}

bool commute(const ConvexTwist& a, const ConvexTwist& b, int holes) {
  return twists_commute(a.holes, b.holes, holes);
}

Letters lex_normal_form(Letters rest, int holes) {
  Letters out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < i && minimal; ++j) minimal = commute(rest[j], rest[i], holes);
      if (minimal && (!have || rest[i] < rest[best])) {
        best = i;
        have = true;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  return out;
}

ConvexTwist relabel(const ConvexTwist& t, const std::vector<int>& injection) {
  std::vector<int> hs;
  for (int h : t.holes) hs.push_back(injection.at(h - 1));
  return ConvexTwist(hs, t.power);
}

Letters relabel(const Letters& w, const std::vector<int>& injection) {
  Letters out;
  for (const auto& t : w) out.push_back(relabel(t, injection));
  return out;
}

// Splits w into x . u . y with u the selected letters in the given order.
// Returns false if no such commutation rearrangement exists.
bool split_around(const Letters& w, const std::vector<std::size_t>& positions, int holes, Letters& x, Letters& u,
                  Letters& y) {
  const std::size_t len = w.size();
  std::vector<char> selected(len, 0), after(len, 0), before(len, 0);
  for (std::size_t p : positions) selected[p] = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (selected[i]) continue;
    for (std::size_t j = 0; j < i && !after[i]; ++j)
      if ((selected[j] || after[j]) && !commute(w[j], w[i], holes)) after[i] = 1;
  }
  for (std::size_t i = len; i-- > 0;) {
    if (selected[i]) continue;
    for (std::size_t j = i + 1; j < len && !before[i]; ++j)
      if ((selected[j] || before[j]) && !commute(w[j], w[i], holes)) before[i] = 1;
  }
  x.clear();
  u.clear();
  y.clear();
  for (std::size_t i = 0; i < len; ++i) {
    if (selected[i]) continue;
    if (after[i] && before[i]) return false;
    (after[i] ? y : x).push_back(w[i]);
  }
  for (std::size_t p : positions) u.push_back(w[p]);
  Letters joined = x;
  joined.insert(joined.end(), u.begin(), u.end());
  joined.insert(joined.end(), y.begin(), y.end());
  return lex_normal_form(joined, holes) == lex_normal_form(w, holes);
}

std::vector<std::vector<int>> circular_injections(int k, int n) {
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    for (int r = 0; r < k; ++r) {
      std::vector<int> inj(k);
      for (int i = 0; i < k; ++i) inj[i] = pick[(i + r) % k];
      out.push_back(std::move(inj));
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::string holes_text(const std::vector<int>& hs) {
  std::string s = "{";
  for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? "," : "") + std::to_string(hs[i]);
  return s + "}";
}

}  // namespace

Rewrite make_rewrite(std::string name, Factorization lhs, Factorization rhs) {
  if (lhs.holes() != rhs.holes()) throw DomainError("rewrite sides live on different surfaces");
  if (!lhs.is_positive() || !rhs.is_positive()) throw DomainError("rewrite sides must be positive");
  if (!equal(lhs, rhs)) throw DomainError("rewrite '" + name + "' does not hold in the mapping class group");
  return Rewrite{std::move(name), std::move(lhs), std::move(rhs)};
}

Rewrite make_rewrite(const Relation& r) { return make_rewrite(r.name, r.lhs, r.rhs); }

Rewrite reversed(const Rewrite& r) {
  std::string name = r.name;
  if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0)
    name.resize(name.size() - 3);
  else
    name += "^-1";
  return Rewrite{name, r.rhs, r.lhs};
}

std::vector<Rewrite> rule_set(const std::string& name, int max_param) {
  std::vector<Rewrite> out;
  if (name == "lantern") {
    out.push_back(make_rewrite(lantern({1}, {2}, {3})));
  } else if (name == "daisy") {
    if (max_param < 2) throw DomainError("daisy rules need p >= 2");
    for (int p = 2; p <= max_param; ++p) {
      std::vector<std::vector<int>> groups;
      for (int i = 1; i <= p + 1; ++i) groups.push_back({i});
      Relation r = daisy(groups);
      r.name = "daisy(p=" + std::to_string(p) + ")";
      out.push_back(make_rewrite(r));
    }
  } else if (name == "generalized-lantern") {
    if (max_param < 3) throw DomainError("generalized lantern rules need k >= 3");
    for (int k = 3; k <= max_param; ++k) {
      Relation r = generalized_lantern(k);
      r.name = "generalized-lantern(k=" + std::to_string(k) + ")";
      out.push_back(make_rewrite(r));
    }
  } else {
    throw DomainError("unknown rule set '" + name + "'");
  }
  return out;
}

OccurrenceSearch find_occurrences(const Factorization& f, const Rewrite& r, std::size_t budget) {
  OccurrenceSearch result;
  const Letters w = unit_letters(f);
  const Letters templ = unit_letters(r.lhs);
  const int n = f.holes();
  Letters x, u, y;
  for (const auto& inj : circular_injections(r.lhs.holes(), n)) {
    const Letters pattern = relabel(templ, inj);
    std::vector<std::size_t> pos(pattern.size());
    std::vector<char> used(w.size(), 0);
    bool stop = false;
    auto search = [&](auto&& self, std::size_t j) -> void {
      if (stop) return;
      if (j == pattern.size()) {
        if (split_around(w, pos, n, x, u, y)) result.occurrences.push_back({inj, pos});
        return;
      }
      std::size_t from = 0;
      for (std::size_t i = j; i-- > 0;)
        if (pattern[i] == pattern[j]) {
          from = pos[i] + 1;
          break;
        }
      for (std::size_t q = from; q < w.size(); ++q) {
        if (used[q] || !(w[q] == pattern[j])) continue;
        if (++result.candidates > budget) {
          result.status = SearchStatus::BudgetExhausted;
          stop = true;
          return;
        }
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i)
          if (pos[i] > q) ok = commute(w[pos[i]], w[q], n);
        if (!ok) continue;
        pos[j] = q;
        used[q] = 1;
        self(self, j + 1);
        used[q] = 0;
        if (stop) return;
      }
    };
    search(search, 0);
    if (stop) break;
  }
  std::sort(result.occurrences.begin(), result.occurrences.end());
  result.occurrences.erase(std::unique(result.occurrences.begin(), result.occurrences.end()),
                           result.occurrences.end());
  return result;
}

Factorization apply(const Factorization& f, const Occurrence& occ, const Rewrite& r, bool check) {
  const Letters w = unit_letters(f);
  const Letters pattern = relabel(unit_letters(r.lhs), occ.injection);
  if (occ.injection.size() != static_cast<std::size_t>(r.lhs.holes()) || occ.positions.size() != pattern.size())
    throw DomainError("occurrence does not fit rewrite '" + r.name + "'");
  for (int h : occ.injection)
    if (h < 1 || h > f.holes()) throw DomainError("occurrence maps a hole outside the surface");
  std::vector<char> seen(w.size(), 0);
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    const std::size_t p = occ.positions[j];
    if (p >= w.size() || seen[p] || !(w[p] == pattern[j]))
      throw DomainError("occurrence letters do not match rewrite '" + r.name + "'");
    seen[p] = 1;
  }
  Letters x, u, y;
  if (!split_around(w, occ.positions, f.holes(), x, u, y))
    throw DomainError("occurrence cannot be made contiguous by commutations");
  const Letters replacement = relabel(unit_letters(r.rhs), occ.injection);
  x.insert(x.end(), replacement.begin(), replacement.end());
  x.insert(x.end(), y.begin(), y.end());
  Factorization out(f.holes(), x);
  if (check && !equal(out, f)) throw DomainError("substitution changed the total monodromy");
  return out;
}

Factorization canonical_form(const Factorization& f) {
  return Factorization(f.holes(), lex_normal_form(f.expanded().word(), f.holes()));
}

bool commutation_equivalent(const Factorization& f, const Factorization& g) {
  return f.holes() == g.holes() && canonical_form(f) == canonical_form(g);
}

std::string ReachResult::summary() const {
  std::ostringstream os;
  if (reached) {
    os << "reached in " << path.size() << " step" << (path.size() == 1 ? "" : "s") << " (" << states
       << " states explored)";
  } else {
    os << "exhausted: " << states << " states explored through depth " << depth;
    if (state_limited)
      os << " (state budget hit)";
    else if (depth_limited)
      os << " (depth budget hit)";
    else
      os << " (search space closed)";
    os << "; this is not a proof that the target is unreachable";
  }
  return os.str();
}

ReachResult reachable(const Factorization& start, const Factorization& target, const std::vector<Rewrite>& rules,
                      const ReachOptions& options) {
  if (options.max_depth < 0) throw DomainError("max depth must be nonnegative");
  if (options.max_states < 1) throw DomainError("max states must be positive");
  if (start.holes() != target.holes()) throw DomainError("start and target live on different surfaces");
  unit_letters(start);
  unit_letters(target);
  if (!equal(start, target)) throw MonodromyMismatch("start and target have different total monodromy");

  std::vector<Rewrite> moves;
  for (const auto& r : rules) {
    moves.push_back(r);
    moves.push_back(reversed(r));
  }

  std::map<MappingClassNF, ConvexTwist> convex_by_action;
  const int n = start.holes();
  if (options.hurwitz) {
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> hs;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) hs.push_back(i + 1);
      ConvexTwist t(hs);
      convex_by_action.emplace(twist_automorphism(n, t), t);
    }
  }

  struct Node {
    Factorization word;
    std::size_t parent;
    std::string move;
  };
  std::vector<Node> nodes;
  std::map<std::vector<ConvexTwist>, std::size_t> index;
  const Factorization goal = canonical_form(target);
  ReachResult result;

  auto finish = [&](std::size_t at) {
    result.reached = true;
    std::vector<ReachStep> rev;
    for (std::size_t i = at; i != 0; i = nodes[i].parent) rev.push_back({nodes[i].move, nodes[i].word});
    result.path.assign(rev.rbegin(), rev.rend());
    result.states = nodes.size();
    return result;
  };

  nodes.push_back({canonical_form(start), 0, ""});
  index.emplace(nodes[0].word.word(), 0);
  if (nodes[0].word == goal) return finish(0);

  std::size_t layer_begin = 0, layer_end = 1;
  for (int depth = 0; depth < options.max_depth; ++depth) {
    for (std::size_t cur = layer_begin; cur < layer_end; ++cur) {
      std::vector<std::pair<Factorization, std::string>> next;
      const Factorization here = nodes[cur].word;
      for (const auto& m : moves) {
        const OccurrenceSearch found = find_occurrences(here, m);
        if (found.status == SearchStatus::BudgetExhausted)
          throw ResourceError("occurrence search budget exhausted for rule '" + m.name + "'");
        for (const auto& occ : found.occurrences)
          next.emplace_back(apply(here, occ, m, false), m.name + "@" + holes_text(occ.injection));
      }
      if (options.hurwitz) {
        const Letters& w = here.word();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          const ConvexTwist &a = w[i], &b = w[i + 1];
          if (commute(a, b, n)) continue;
          const ConvexTwist b_inv(b.holes, -1), a_inv(a.holes, -1);
          auto right = convex_by_action.find(act(Factorization(n, {b_inv, a, b})));
          if (right != convex_by_action.end()) {
            Letters v = w;
            v[i] = b;
            v[i + 1] = right->second;
            next.emplace_back(Factorization(n, v), "hurwitz@" + std::to_string(i + 1));
          }
          auto left = convex_by_action.find(act(Factorization(n, {a, b, a_inv})));
          if (left != convex_by_action.end()) {
            Letters v = w;
            v[i] = left->second;
            v[i + 1] = a;
            next.emplace_back(Factorization(n, v), "hurwitz^-1@" + std::to_string(i + 1));
          }
        }
      }
      for (auto& [word, move] : next) {
        Factorization canon = canonical_form(word);
        if (index.count(canon.word())) continue;
        if (nodes.size() >= options.max_states) {
          result.state_limited = true;
          result.states = nodes.size();
          result.depth = depth;
          return result;
        }
        index.emplace(canon.word(), nodes.size());
        nodes.push_back({std::move(canon), cur, move});
        if (nodes.back().word == goal) return finish(nodes.size() - 1);
      }
    }
    layer_begin = layer_end;
    layer_end = nodes.size();
    if (layer_begin == layer_end) break;
    result.depth = depth + 1;
  }
  result.depth_limited = layer_begin != layer_end;
  result.states = nodes.size();
  return result;
}

}  // namespace starsurg
