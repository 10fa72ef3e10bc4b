// starsurg: command-line front end.
//
// Exit status: 0 success, 1 negative answer (not equal, search exhausted),
// 2 usage or input error, 3 resource budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "starsurg/census.hpp"
#include "starsurg/dualize.hpp"
#include "starsurg/embedder.hpp"
#include "starsurg/errors.hpp"
#include "starsurg/lefschetz.hpp"
#include "starsurg/obstruction.hpp"
#include "starsurg/substitution.hpp"

using namespace starsurg;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), path);
  }
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && x > 0) return x;
  }
  return fallback;
}

std::pair<int, int> parse_range(const std::string& text) {
  int lo = 0, hi = 0;
  char dots[3] = {};
  std::istringstream is(text);
  if (!(is >> lo) || !is.get(dots[0]) || !is.get(dots[1]) || dots[0] != '.' || dots[1] != '.' || !(is >> hi))
    throw DomainError("range '" + text + "' must look like 2..5");
  return {lo, hi};
}

ordered_json graph_json(const StarPlumbing& g) {
  ordered_json j;
  j["center"] = g.center_weight();
  j["arms"] = g.arms();
  j["side"] = g.side() == Side::Cap ? "cap" : "filling";
  return j;
}

std::vector<std::string> class_strings(const CapEmbedding& e) {
  std::vector<std::string> out;
  for (const auto& c : e.classes) out.push_back(c.to_string());
  return out;
}

StarPlumbing as_cap(StarPlumbing g) { return g.side() == Side::Cap ? g : dual_cap(g); }

struct Common {
  bool json = false;
};

int cmd_dualize(const std::string& path, const Common& c) {
  const auto graphs = parse_file(path, [](const std::string& t) { return parse_graphs(t); });
  ordered_json all = ordered_json::array();
  for (const auto& g : graphs) {
    if (!is_dually_positive(g)) throw DomainError("graph is not dually positive:\n" + format_graph(g));
    const StarPlumbing cap = dual_cap(g);
    const CapEmbedding emb = canonical_relabel(canonical_embedding(g));
    if (c.json) {
      all.push_back({{"graph", graph_json(g)},
                     {"cap", graph_json(cap)},
                     {"canonical", class_strings(emb)},
                     {"N", emb.N()}});
    } else {
      std::cout << format_graph(cap) << "# canonical embedding, N = " << emb.N() << "\n"
                << format_embedding(cap, emb) << "\n";
    }
  }
  if (c.json) std::cout << all.dump(2) << "\n";
  return kOk;
}

int cmd_enumerate(const std::string& path, const std::string& mode, std::uint64_t budget, const Common& c) {
  const auto graphs = parse_file(path, [](const std::string& t) { return parse_graphs(t); });
  EnumerationOptions opts;
  opts.mode = mode == "fast" ? SearchMode::Fast : SearchMode::Audit;
  opts.node_budget = budget;
  ordered_json all = ordered_json::array();
  int status = kOk;
  for (const auto& g : graphs) {
    const StarPlumbing cap = as_cap(g);
    const EnumerationResult res = enumerate(cap, opts);
    if (!res.complete()) status = kResource;
    ordered_json j;
    j["cap"] = graph_json(cap);
    j["complete"] = res.complete();
    j["nodes"] = res.nodes;
    j["embeddings"] = ordered_json::array();
    if (!c.json) {
      std::cout << format_graph(cap) << "# " << res.embeddings.size() << " embedding(s)"
                << (res.complete() ? "" : " [node budget exhausted, list incomplete]") << ", " << res.nodes
                << " search nodes\n";
    }
    for (const auto& e : res.embeddings) {
      const StructureReport rep = check_structure(cap, e);
      if (c.json) {
        j["embeddings"].push_back({{"N", e.N()},
                                   {"chi", complement_euler(cap, e)},
                                   {"b2", complement_betti2(cap, e)},
                                   {"lemmas", rep.summary()},
                                   {"classes", class_strings(e)}});
      } else {
        std::cout << "# N = " << e.N() << ", chi = " << complement_euler(cap, e)
                  << ", b2 = " << complement_betti2(cap, e) << ", " << rep.summary() << "\n"
                  << format_embedding(cap, e);
      }
    }
    if (!c.json) std::cout << "\n";
    all.push_back(j);
  }
  if (c.json) std::cout << all.dump(2) << "\n";
  return status;
}

int cmd_euler(const std::string& path, int a, int b, const Common& c) {
  std::vector<StarPlumbing> graphs;
  if (!path.empty())
    graphs = parse_file(path, [](const std::string& t) { return parse_graphs(t); });
  else
    graphs.push_back(make_P(a, b));
  ordered_json all = ordered_json::array();
  int status = kOk;
  for (const auto& g : graphs) {
    ordered_json j;
    if (g.side() != Side::Cap) j["plumbing_chi"] = euler_characteristic(g);
    const StarPlumbing cap = as_cap(g);
    const EnumerationResult res = enumerate(cap);
    if (!res.complete()) status = kResource;
    std::vector<int> chis;
    for (const auto& e : res.embeddings) chis.push_back(complement_euler(cap, e));
    j["complement_chi"] = chis;
    j["complete"] = res.complete();
    if (c.json) {
      all.push_back(j);
    } else {
      if (j.contains("plumbing_chi")) std::cout << "plumbing chi: " << j["plumbing_chi"] << "\n";
      std::cout << "complement chi:";
      for (int x : chis) std::cout << " " << x;
      std::cout << (res.complete() ? "" : "  [incomplete]") << "\n";
    }
  }
  if (c.json) std::cout << all.dump(2) << "\n";
  return status;
}

int cmd_obstruct(int a, int b, const Common& c) {
  const Verdict v = single_blowdown_verdict(a, b);
  if (c.json) {
    ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["verdict"] = outcome_name(v.outcome);
    j["required_size"] = v.required_size;
    j["families"] = ordered_json::array();
    for (const auto& f : v.families)
      j["families"].push_back({{"family", f.family}, {"eliminated", f.eliminated}, {"reason", f.reason}});
    if (v.witness) j["witness"] = v.witness->to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v.certificate();
  }
  return kOk;
}

int cmd_park(const std::string& sides, const std::string& p, const std::string& q, const Common& c) {
  LinearChain chain;
  ordered_json j;
  if (!sides.empty()) {
    const auto s = parse_sides(sides);
    chain = park_chain_recursive(s);
    j["sides"] = format_sides(s);
    j["descriptor"] = park_descriptor(s).m;
  } else {
    if (p.empty() || q.empty()) throw DomainError("park needs --sides or both --p and --q");
    chain = park_chain_fraction(Integer(p), Integer(q));
  }
  j["chain"] = chain.weights;
  if (auto pq = park_parameters(chain)) {
    j["p"] = pq->p.str();
    j["q"] = pq->q.str();
  }
  j["negative_definite"] = is_negative_definite(chain);
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << chain.to_string() << "\n";
    if (j.contains("p")) std::cout << "p = " << j["p"].get<std::string>() << ", q = " << j["q"].get<std::string>() << "\n";
    std::cout << "negative definite: " << (is_negative_definite(chain) ? "yes" : "no") << "\n";
  }
  return kOk;
}

Relation named_relation(const std::string& name, int p, int k, int m, int n) {
  if (name == "lantern") return lantern({1}, {2}, {3});
  if (name == "daisy") {
    std::vector<std::vector<int>> groups;
    for (int i = 1; i <= p + 1; ++i) groups.push_back({i});
    return daisy(groups);
  }
  if (name == "generalized-lantern") return generalized_lantern(k);
  if (name == "FG") return Relation{"FG", F_factorization(m, n), G_factorization(m, n)};
  throw DomainError("unknown relation '" + name + "' (lantern, daisy, generalized-lantern, FG)");
}

int cmd_verify(const std::string& name, int p, int k, int m, int n, const std::string& lhs, const std::string& rhs,
               const Common& c) {
  Relation r;
  if (!lhs.empty() || !rhs.empty()) {
    if (lhs.empty() || rhs.empty()) throw DomainError("--lhs and --rhs go together");
    r.name = "files";
    r.lhs = parse_file(lhs, [](const std::string& t) { return parse_factorization(t); });
    r.rhs = parse_file(rhs, [](const std::string& t) { return parse_factorization(t); });
  } else {
    r = named_relation(name, p, k, m, n);
  }
  const bool eq = equal(r.lhs, r.rhs);
  if (c.json) {
    std::cout << ordered_json{{"relation", r.name},
                              {"lhs", r.lhs.to_string()},
                              {"rhs", r.rhs.to_string()},
                              {"equal", eq}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << r.name << ": " << r.lhs.to_string() << "  vs  " << r.rhs.to_string() << "\n"
              << (eq ? "equal" : "not equal") << "\n";
  }
  return eq ? kOk : kNegative;
}

int cmd_replay(int m, int n, bool check, const Common& c) {
  const ReplayTrace t = proof_replay(m, n);
  bool preserved = true;
  if (check) {
    const MappingClassNF target = act(F_factorization(m, n));
    for (const auto& s : t.steps) preserved = preserved && act(s.word) == target;
  }
  if (c.json) {
    ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["success"] = t.success;
    j["transpositions"] = t.transpositions;
    if (check) j["act_preserved"] = preserved;
    j["steps"] = ordered_json::array();
    for (const auto& s : t.steps) j["steps"].push_back({{"step", s.description}, {"word", s.word.to_string()}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << t.format();
    if (check) std::cout << "action preserved at every step: " << (preserved ? "yes" : "NO") << "\n";
  }
  return t.success && preserved ? kOk : kNegative;
}

int cmd_subst(const std::string& start_path, const std::string& target_path, const std::string& rules_text,
              int max_param, const ReachOptions& opts, const Common& c) {
  const Factorization start = parse_file(start_path, [](const std::string& t) { return parse_factorization(t); });
  const Factorization target = parse_file(target_path, [](const std::string& t) { return parse_factorization(t); });
  std::vector<Rewrite> rules;
  std::stringstream ss(rules_text);
  for (std::string name; std::getline(ss, name, ',');) {
    const int param = name == "generalized-lantern" ? std::max(max_param, 3) : max_param;
    for (auto& r : rule_set(name, param)) rules.push_back(std::move(r));
  }
  const ReachResult res = reachable(start, target, rules, opts);
  if (c.json) {
    ordered_json j;
    j["result"] = res.reached ? "reached" : "exhausted";
    j["states"] = res.states;
    j["depth"] = res.depth;
    if (!res.reached) j["proof"] = false;
    j["path"] = ordered_json::array();
    for (const auto& s : res.path) j["path"].push_back({{"move", s.move}, {"word", s.word.to_string()}});
    j["summary"] = res.summary();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.summary() << "\n";
    for (const auto& s : res.path) std::cout << "  " << s.move << ": " << s.word.to_string() << "\n";
  }
  return res.reached ? kOk : kNegative;
}

int cmd_invariants(const std::string& path, const Common& c) {
  const Factorization f = parse_file(path, [](const std::string& t) { return parse_factorization(t); });
  const FillingInvariants inv = homology(f);
  std::vector<std::string> torsion;
  for (const auto& t : inv.torsion) torsion.push_back(t.str());
  if (c.json) {
    std::cout << ordered_json{{"euler", inv.euler}, {"b1", inv.b1}, {"torsion", torsion}}.dump(2) << "\n";
  } else {
    std::cout << "chi = " << inv.euler << "\nb1 = " << inv.b1 << "\ninvariant factors:";
    if (torsion.empty()) std::cout << " none";
    for (const auto& t : torsion) std::cout << " " << t;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_census(const std::string& family, const std::string& ar, const std::string& br, const std::string& out,
               unsigned workers, bool timing, const Common& c) {
  CensusOptions o;
  o.family = family;
  std::tie(o.a_min, o.a_max) = parse_range(ar);
  std::tie(o.b_min, o.b_max) = parse_range(br);
  o.workers = workers;
  o.timing = timing;
  const auto records = run_census(o);
  std::size_t failed = 0;
  for (const auto& r : records) failed += !r.ok;
  if (out.empty()) {
    for (const auto& r : records) std::cout << r.to_line() << "\n";
  } else {
    const AppendStats st = append_census(out, records);
    if (c.json)
      std::cout << ordered_json{{"written", st.written}, {"skipped", st.skipped}, {"failed", failed}}.dump() << "\n";
    else
      std::cout << st.written << " record(s) written, " << st.skipped << " already present, " << failed
                << " failed cell(s)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star surgery toolkit: plumbings, caps, embeddings, planar monodromy"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Machine-readable output");

  std::string path, mode = "audit", name = "lantern", lhs, rhs, sides, p_text, q_text, target, rules = "lantern",
                    family = "P", a_range = "2..5", b_range = "2..5", out;
  int a = 2, b = 3, p = 3, k = 4, m = 1, n = 1, max_param = 4;
  bool check = false, timing = false;
  unsigned workers = 1;
  std::uint64_t budget = env_u64("STARSURG_NODE_BUDGET", 200'000'000);
  ReachOptions reach;
  reach.max_states = env_u64("STARSURG_MAX_STATES", reach.max_states);

  auto* dualize = app.add_subcommand("dualize", "Dual cap and canonical embedding of filling graphs");
  dualize->add_option("graph", path, "Graph file")->required();

  auto* en = app.add_subcommand("enumerate-embeddings", "All embeddings of a cap (filling graphs are dualized)");
  en->add_option("graph", path, "Graph file")->required();
  en->add_option("--mode", mode, "audit or fast")->check(CLI::IsMember({"audit", "fast"}));
  en->add_option("--budget", budget, "Search node budget (env STARSURG_NODE_BUDGET)");

  auto* eu = app.add_subcommand("euler", "Euler characteristics of the plumbing and the complements");
  auto* eu_path = eu->add_option("graph", path, "Graph file");
  eu->add_option("--a", a)->excludes(eu_path);
  eu->add_option("--b", b)->excludes(eu_path);

  auto* ob = app.add_subcommand("obstruct", "Single rational blow-down verdict for P_{a,b}");
  ob->add_option("--a", a)->required();
  ob->add_option("--b", b)->required();

  auto* pk = app.add_subcommand("park", "Park family chains");
  auto* pk_sides = pk->add_option("--sides", sides, "Blow-up sides, e.g. LRL");
  pk->add_option("--p", p_text)->excludes(pk_sides);
  pk->add_option("--q", q_text)->excludes(pk_sides);

  auto* vr = app.add_subcommand("verify-relation", "Check a relation in the mapping class group");
  vr->add_option("--name", name, "lantern, daisy, generalized-lantern or FG");
  vr->add_option("--p", p, "Daisy petals");
  vr->add_option("--k", k, "Generalized lantern holes");
  vr->add_option("--m", m);
  vr->add_option("--n", n);
  vr->add_option("--lhs", lhs, "Factorization file");
  vr->add_option("--rhs", rhs, "Factorization file");

  auto* pr = app.add_subcommand("proof-replay", "Replay the commutation proof of F_{m,n} = G_{m,n}");
  pr->add_option("--m", m)->required();
  pr->add_option("--n", n)->required();
  pr->add_flag("--check", check, "Confirm every step has the same action");

  auto* ss = app.add_subcommand("subst-search", "Bounded search for a substitution sequence");
  ss->add_option("start", path, "Start factorization")->required();
  ss->add_option("target", target, "Target factorization")->required();
  ss->add_option("--rules", rules, "Comma-separated: lantern, daisy, generalized-lantern");
  ss->add_option("--max-param", max_param, "Largest daisy p / generalized lantern k");
  ss->add_option("--max-depth", reach.max_depth);
  ss->add_option("--max-states", reach.max_states, "State budget (env STARSURG_MAX_STATES)");
  ss->add_flag("--hurwitz", reach.hurwitz, "Also allow Hurwitz moves between convex twists");

  auto* iv = app.add_subcommand("invariants", "Euler characteristic and H_1 of a positive factorization");
  iv->add_option("factorization", path)->required();

  auto* ce = app.add_subcommand("census", "Grid census of the P_{a,b} family");
  ce->add_option("--family", family);
  ce->add_option("--a-range", a_range);
  ce->add_option("--b-range", b_range);
  ce->add_option("--out", out, "NDJSON file to append to (stdout if omitted)");
  ce->add_option("--workers", workers)->check(CLI::PositiveNumber);
  ce->add_flag("--timing", timing, "Add per-cell wall time (excluded from the content hash)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dualize) return cmd_dualize(path, common);
    if (*en) return cmd_enumerate(path, mode, budget, common);
    if (*eu) return cmd_euler(path, a, b, common);
    if (*ob) return cmd_obstruct(a, b, common);
    if (*pk) return cmd_park(sides, p_text, q_text, common);
    if (*vr) return cmd_verify(name, p, k, m, n, lhs, rhs, common);
    if (*pr) return cmd_replay(m, n, check, common);
    if (*ss) return cmd_subst(path, target, rules, max_param, reach, common);
    if (*iv) return cmd_invariants(path, common);
    if (*ce) return cmd_census(family, a_range, b_range, out, workers, timing, common);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const MonodromyMismatch& e) {
    std::cerr << "monodromy mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
