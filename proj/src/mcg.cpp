#include "starsurg/mcg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "starsurg/errors.hpp"

namespace starsurg {

ConvexTwist::ConvexTwist(std::vector<int> hs, int p) : holes(std::move(hs)), power(p) {
  std::sort(holes.begin(), holes.end());
  if (holes.empty()) throw DomainError("a convex twist needs at least one hole");
  if (std::adjacent_find(holes.begin(), holes.end()) != holes.end())
    throw DomainError("convex twist holes must be distinct");
  if (holes.front() < 1) throw DomainError("holes are numbered from 1");
  if (power == 0) throw DomainError("twist power must be nonzero");
}

std::string ConvexTwist::to_string() const {
  std::string out = "phi{";
  for (std::size_t i = 0; i < holes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(holes[i]);
  }
  out += '}';
  if (power != 1) out += "^" + std::to_string(power);
  return out;
}

Factorization::Factorization(int holes, std::vector<ConvexTwist> word) : holes_(holes) {
  if (holes < 1) throw DomainError("a holed disk needs at least one hole");
  for (auto& t : word) push_back(t);
}

void Factorization::push_back(const ConvexTwist& t) {
  if (t.holes.back() > holes_)
    throw DomainError("twist " + t.to_string() + " uses a hole outside 1.." + std::to_string(holes_));
  word_.push_back(t);
}

Factorization& Factorization::append(const Factorization& other) {
  if (other.holes_ != holes_) throw DomainError("factorizations live on different surfaces");
  for (const auto& t : other.word_) word_.push_back(t);
  return *this;
}

long Factorization::length() const {
  long n = 0;
  for (const auto& t : word_) n += std::abs(t.power);
  return n;
}

bool Factorization::is_positive() const {
  return std::all_of(word_.begin(), word_.end(), [](const ConvexTwist& t) { return t.power > 0; });
}

Factorization Factorization::expanded() const {
  Factorization out(holes_);
  for (const auto& t : word_) {
    const int unit = t.power > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(t.power); ++k) out.word_.push_back(ConvexTwist(t.holes, unit));
  }
  return out;
}

Factorization Factorization::inverse() const {
  Factorization out(holes_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out.word_.push_back(ConvexTwist(it->holes, -it->power));
  return out;
}

std::string Factorization::to_string() const {
  if (word_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += word_[i].to_string();
  }
  return out;
}

bool MappingClassNF::is_identity() const {
  for (std::size_t g = 0; g < images.size(); ++g)
    if (images[g].size() != 1 || images[g][0] != static_cast<int>(g) + 1) return false;
  return true;
}

long MappingClassNF::total_length() const {
  long n = 0;
  for (const auto& w : images) n += static_cast<long>(w.size());
  return n;
}

long default_word_limit() {
  if (const char* env = std::getenv("STARSURG_WORD_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

MappingClassNF identity_nf(int holes) {
  MappingClassNF nf;
  nf.holes = holes;
  for (int g = 1; g <= 2 * holes; ++g) nf.images.push_back({g});
  return nf;
}

namespace {

using Images = std::vector<FreeWord>;  // index 0 is unused

Images identity_images(int gens) {
  Images a(gens + 1);
  for (int i = 1; i <= gens; ++i) a[i] = {i};
  return a;
}

FreeWord substitute(const Images& a, const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    if (x > 0) {
      for (int y : a[x]) push_reduced(out, y);
    } else {
      const FreeWord& img = a[-x];
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return out;
}

// (a o b)(x) = a(b(x))
Images compose(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t i = 1; i < a.size(); ++i) r[i] = substitute(a, b[i]);
  return r;
}

// Artin half twist exchanging punctures i and i+1.
Images half_twist(int gens, int i, int e) {
  Images a = identity_images(gens);
  if (e > 0) {
    a[i] = {i, i + 1, -i};
    a[i + 1] = {i};
  } else {
    a[i] = {i + 1};
    a[i + 1] = {-(i + 1), i, i + 1};
  }
  return a;
}

// Twist about a round curve around the consecutive punctures first..last.
Images block_twist(int gens, int first, int last, int power) {
  FreeWord w;
  for (int j = first; j <= last; ++j) w.push_back(j);
  const FreeWord base = power > 0 ? w : free_inverse(w);
  FreeWord conj;
  for (int k = 0; k < std::abs(power); ++k) conj = free_concat(conj, base);
  const FreeWord conj_inv = free_inverse(conj);
  Images a = identity_images(gens);
  for (int j = first; j <= last; ++j) a[j] = free_concat(free_concat(conj, {j}), conj_inv);
  return a;
}

// A convex curve around non-consecutive holes passes above the punctures it
// skips. Slide the selected punctures together with half twists, twist the
// resulting block, and slide back.
Images convex_twist_images(int holes, const ConvexTwist& t) {
  if (t.holes.back() > holes) throw DomainError("twist " + t.to_string() + " exceeds the surface");
  const int gens = 2 * holes;
  std::vector<bool> in(gens + 1, false);
  for (int h : t.holes) in[2 * h - 1] = in[2 * h] = true;
  const int first = 2 * t.holes.front() - 1;
  const int count = 2 * static_cast<int>(t.holes.size());
  Images slide = identity_images(gens), unslide = identity_images(gens);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = first; i < gens; ++i) {
      if (!in[i] && in[i + 1]) {
        slide = compose(half_twist(gens, i, 1), slide);
        unslide = compose(unslide, half_twist(gens, i, -1));
        std::swap(in[i], in[i + 1]);
        moved = true;
      }
    }
  }
  return compose(unslide, compose(block_twist(gens, first, first + count - 1, t.power), slide));
}

}  // namespace

MappingClassNF twist_automorphism(int holes, const ConvexTwist& t) {
  MappingClassNF nf;
  nf.holes = holes;
  Images a = convex_twist_images(holes, t);
  nf.images.assign(a.begin() + 1, a.end());
  return nf;
}

MappingClassNF act(const Factorization& f, long word_limit) {
  ActOptions o;
  o.word_limit = word_limit;
  return act(f, o);
}

MappingClassNF act(const Factorization& f, const ActOptions& options) {
  MappingClassNF nf = identity_nf(f.holes());
  std::map<ConvexTwist, Images> cache;
  for (const auto& t : f.word()) {
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, convex_twist_images(f.holes(), t)).first;
    long total = 0;
    for (auto& img : nf.images) {
      img = substitute(it->second, img);
      total += static_cast<long>(img.size());
      if (total > options.word_limit)
        throw ResourceError("free-group images exceed the word limit of " + std::to_string(options.word_limit) +
                            " letters");
    }
  }
  return nf;
}

MappingClassNF act_checked(const Factorization& f, const ActOptions& options) {
  Factorization round = f;
  round.append(f.inverse());
  if (!act(round, options).is_identity()) throw DomainError("composite with the inverse word is not the identity");
  return act(f, options);
}

LinkingMatrix linking_matrix(const Factorization& f) {
  const int n = f.holes();
  LinkingMatrix m(n, std::vector<long>(n, 0));
  for (const auto& t : f.word())
    for (int i : t.holes)
      for (int j : t.holes) m[i - 1][j - 1] += t.power;
  return m;
}

bool equal(const Factorization& f, const Factorization& g, const ActOptions& options) {
  if (f.holes() != g.holes()) throw DomainError("factorizations live on different surfaces");
  if (linking_matrix(f) != linking_matrix(g)) return false;
  return act(f, options) == act(g, options);
}

bool twists_commute(const std::vector<int>& s, const std::vector<int>& t, int holes) {
  std::vector<int> side(holes + 1, 0);  // bit 1: in s, bit 2: in t
  for (int h : s) side[h] |= 1;
  for (int h : t) side[h] |= 2;
  bool s_in_t = true, t_in_s = true, disjoint = true;
  for (int h = 1; h <= holes; ++h) {
    if (side[h] == 1) s_in_t = false;
    if (side[h] == 2) t_in_s = false;
    if (side[h] == 3) disjoint = false;
  }
  if (s_in_t || t_in_s) return true;
  if (!disjoint) return false;
  // Disjoint: the hulls are disjoint iff the marks form at most two cyclic blocks.
  std::vector<int> seq;
  for (int h = 1; h <= holes; ++h)
    if (side[h]) seq.push_back(side[h]);
  int changes = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] != seq[(i + 1) % seq.size()]) ++changes;
  return changes <= 2;
}

namespace {

int infer_holes(const std::vector<std::vector<int>>& groups, int holes) {
  int mx = 0;
  for (const auto& g : groups)
    for (int h : g) mx = std::max(mx, h);
  if (holes == 0) return mx;
  if (holes < mx) throw DomainError("hole groups exceed the surface");
  return holes;
}

void check_groups(const std::vector<std::vector<int>>& groups, int holes) {
  std::vector<int> owner(holes + 1, -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) throw DomainError("hole groups must be nonempty");
    for (int h : groups[g]) {
      if (h < 1 || h > holes) throw DomainError("hole " + std::to_string(h) + " is out of range");
      if (owner[h] != -1) throw DomainError("hole groups must be pairwise disjoint");
      owner[h] = static_cast<int>(g);
    }
  }
  std::vector<int> blocks;
  for (int h = 1; h <= holes; ++h)
    if (owner[h] >= 0 && (blocks.empty() || blocks.back() != owner[h])) blocks.push_back(owner[h]);
  if (blocks.size() > 1 && blocks.front() == blocks.back()) blocks.pop_back();
  const std::size_t k = groups.size();
  bool ok = blocks.size() == k;
  if (ok) {
    auto start = std::find(blocks.begin(), blocks.end(), 0) - blocks.begin();
    for (std::size_t i = 0; i < k && ok; ++i) ok = blocks[(start + i) % k] == static_cast<int>(i);
  }
  if (!ok) throw DomainError("hole groups must be non-interleaved and ordered counterclockwise");
}

std::vector<int> unite(std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Relation lantern(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c, int holes) {
  holes = infer_holes({a, b, c}, holes);
  check_groups({a, b, c}, holes);
  Relation r{"lantern", Factorization(holes), Factorization(holes)};
  r.lhs.push_back(ConvexTwist(unite({&a, &b, &c})));
  r.lhs.push_back(ConvexTwist(a));
  r.lhs.push_back(ConvexTwist(b));
  r.lhs.push_back(ConvexTwist(c));
  r.rhs.push_back(ConvexTwist(unite({&a, &b})));
  r.rhs.push_back(ConvexTwist(unite({&a, &c})));
  r.rhs.push_back(ConvexTwist(unite({&b, &c})));
  return r;
}

Relation daisy(const std::vector<std::vector<int>>& groups, int holes) {
  if (groups.size() < 3) throw DomainError("the daisy relation needs p >= 2");
  holes = infer_holes(groups, holes);
  check_groups(groups, holes);
  const int p = static_cast<int>(groups.size()) - 1;
  Relation r{"daisy", Factorization(holes), Factorization(holes)};
  std::vector<int> all, petals;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    all.insert(all.end(), groups[g].begin(), groups[g].end());
    if (g > 0) petals.insert(petals.end(), groups[g].begin(), groups[g].end());
  }
  r.lhs.push_back(ConvexTwist(all));
  if (p - 1 > 0) r.lhs.push_back(ConvexTwist(groups[0], p - 1));
  for (int g = 1; g <= p; ++g) r.lhs.push_back(ConvexTwist(groups[g]));
  for (int g = 1; g <= p; ++g) r.rhs.push_back(ConvexTwist(unite({&groups[0], &groups[g]})));
  r.rhs.push_back(ConvexTwist(petals));
  return r;
}

Relation generalized_lantern(int k) {
  if (k < 3) throw DomainError("the generalized lantern relation needs k >= 3");
  Relation r{"generalized-lantern", Factorization(k), Factorization(k)};
  std::vector<int> all;
  for (int i = 1; i <= k; ++i) all.push_back(i);
  r.lhs.push_back(ConvexTwist(all));
  for (int i = 1; i <= k; ++i) r.lhs.push_back(ConvexTwist({i}, k - 2));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r.rhs.push_back(ConvexTwist({i, j}));
  return r;
}

Factorization F_factorization(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("F_factorization requires m, n >= 1");
  const int holes = m + n + 1, b = m + 1;
  Factorization f(holes);
  std::vector<int> all;
  for (int i = 1; i <= holes; ++i) all.push_back(i);
  f.push_back(ConvexTwist(all));
  for (int i = 1; i <= m; ++i) f.push_back(ConvexTwist({i}, n));
  f.push_back(ConvexTwist({b}));
  for (int j = 1; j <= n; ++j) f.push_back(ConvexTwist({b + j}, m));
  return f;
}

Factorization G_factorization(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("G_factorization requires m, n >= 1");
  const int holes = m + n + 1, b = m + 1;
  Factorization g(holes);
  std::vector<int> ab, bc;
  for (int i = 1; i <= b; ++i) ab.push_back(i);
  for (int i = b; i <= holes; ++i) bc.push_back(i);
  g.push_back(ConvexTwist(ab));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) g.push_back(ConvexTwist({i, b + j}));
  g.push_back(ConvexTwist(bc));
  return g;
}

bool verify_FG(int m, int n, const ActOptions& options) {
  return equal(F_factorization(m, n), G_factorization(m, n), options);
}

// ---------------------------------------------------------------------------
// Proof replay

namespace {

using Letters = std::vector<ConvexTwist>;

// phi_S = prod_s phi_s^-(k-2) * prod_{s<t} phi_{s,t}, from the generalized
// lantern relation with boundary-parallel twists moved across.
Letters lantern_expansion(const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  Letters out;
  for (int h : s)
    for (int i = 0; i < k - 2; ++i) out.push_back(ConvexTwist({h}, -1));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) out.push_back(ConvexTwist({s[i], s[j]}));
  return out;
}

Letters expand_at(const Letters& w, std::size_t pos) {
  Letters out(w.begin(), w.begin() + pos);
  const Letters mid = lantern_expansion(w[pos].holes);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), w.begin() + pos + 1, w.end());
  return out;
}

// Boundary-parallel twists commute with everything: move them to the front in
// hole order and cancel opposite powers.
Letters collect_singletons(const Letters& w, int holes) {
  std::vector<int> net(holes + 1, 0);
  Letters rest;
  for (const auto& t : w) {
    if (t.holes.size() == 1)
      net[t.holes[0]] += t.power;
    else
      rest.push_back(t);
  }
  Letters out;
  for (int h = 1; h <= holes; ++h)
    for (int k = 0; k < std::abs(net[h]); ++k) out.push_back(ConvexTwist({h}, net[h] > 0 ? 1 : -1));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::string describe(const ConvexTwist& t) { return t.to_string(); }

}  // namespace

ReplayTrace proof_replay(int m, int n) {
  ReplayTrace trace;
  trace.m = m;
  trace.n = n;
  const Factorization F = F_factorization(m, n).expanded();
  const Factorization G = G_factorization(m, n).expanded();
  const int holes = F.holes();
  auto record = [&](std::string what, const Letters& w) {
    trace.steps.push_back({std::move(what), Factorization(holes, w)});
  };

  Letters f = F.word();
  record("F", f);
  if (holes >= 3) {
    f = expand_at(f, 0);
    record("generalized lantern on " + describe(F.word()[0]), f);
  }
  f = collect_singletons(f, holes);
  record("commute boundary-parallel twists to the front and cancel", f);
  trace.f_rewritten = Factorization(holes, f);

  Letters g = G.word();
  record("G", g);
  // Split phi_{A_1..A_m,B} (first letter) and phi_{B,C_1..C_n} (last letter).
  if (m + 1 >= 3) {
    const ConvexTwist first = g.front();
    g = expand_at(g, 0);
    record("generalized lantern on " + describe(first), g);
  }
  if (n + 1 >= 3) {
    const ConvexTwist last = g.back();
    g = expand_at(g, g.size() - 1);
    record("generalized lantern on " + describe(last), g);
  }
  trace.g_rewritten = Factorization(holes, g);

  if (g.size() != f.size()) throw DomainError("no commutation path found: rewritten words differ in length");
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::size_t j = i;
    for (; j < g.size(); ++j) {
      if (!(g[j] == f[i])) continue;
      bool free_path = true;
      for (std::size_t q = i; q < j && free_path; ++q) free_path = twists_commute(g[q].holes, g[j].holes, holes);
      if (free_path) break;
    }
    if (j == g.size())
      throw DomainError("no commutation path found at position " + std::to_string(i) + " (" + describe(f[i]) + ")");
    for (std::size_t q = j; q > i; --q) {
      std::swap(g[q - 1], g[q]);
      ++trace.transpositions;
      record("commute " + describe(g[q]) + " past " + describe(g[q - 1]), g);
    }
  }
  trace.success = g == f;
  if (!trace.success) throw DomainError("no commutation path found");
  return trace;
}

std::string ReplayTrace::format() const {
  std::ostringstream os;
  os << "proof replay (m,n) = (" << m << "," << n << "): " << (success ? "success" : "failure") << ", "
     << steps.size() << " steps, " << transpositions << " transpositions\n";
  for (std::size_t i = 0; i < steps.size(); ++i)
    os << "  [" << i << "] " << steps[i].description << ": " << steps[i].word.to_string() << "\n";
  return os.str();
}

Factorization parse_factorization(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0, holes = 0;
  std::vector<std::pair<ConvexTwist, int>> twists;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (keyword == "holes") {
      std::istringstream rs(rest);
      std::string extra;
      if (!(rs >> holes) || holes < 1 || (rs >> extra)) throw ParseError("holes takes one positive integer", line_no);
    } else if (keyword == "twist") {
      std::string spec = rest, power_text;
      if (auto caret = rest.find('^'); caret != std::string::npos) {
        spec = rest.substr(0, caret);
        power_text = rest.substr(caret + 1);
      }
      std::vector<int> hs;
      std::string item;
      std::istringstream ss(spec);
      while (std::getline(ss, item, ',')) {
        std::istringstream is(item);
        int h;
        std::string extra;
        if (!(is >> h) || (is >> extra)) throw ParseError("malformed hole list '" + spec + "'", line_no);
        hs.push_back(h);
      }
      int power = 1;
      if (!power_text.empty()) {
        std::istringstream ps(power_text);
        std::string extra;
        if (!(ps >> power) || (ps >> extra)) throw ParseError("malformed power '" + power_text + "'", line_no);
      }
      try {
        twists.emplace_back(ConvexTwist(hs, power), line_no);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line_no);
      }
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no);
    }
  }
  int mx = 0;
  for (const auto& [t, line] : twists) mx = std::max(mx, t.holes.back());
  if (holes == 0) holes = std::max(mx, 1);
  Factorization f(holes);
  for (const auto& [t, line] : twists) {
    if (t.holes.back() > holes)
      throw ParseError("hole " + std::to_string(t.holes.back()) + " exceeds holes " + std::to_string(holes), line);
    f.push_back(t);
  }
  return f;
}

std::string format_factorization(const Factorization& f) {
  std::ostringstream os;
  os << "holes " << f.holes() << "\n";
  for (const auto& t : f.word()) {
    os << "twist ";
    for (std::size_t i = 0; i < t.holes.size(); ++i) os << (i ? "," : "") << t.holes[i];
    if (t.power != 1) os << " ^ " << t.power;
    os << "\n";
  }
  return os.str();
}

}  // namespace starsurg
