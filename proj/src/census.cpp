#include "starsurg/census.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "starsurg/dualize.hpp"
#include "starsurg/embedder.hpp"
#include "starsurg/errors.hpp"
#include "starsurg/lefschetz.hpp"
#include "starsurg/obstruction.hpp"

namespace starsurg {

namespace {

using nlohmann::ordered_json;

ordered_json body(const CensusRecord& r) {
  ordered_json j;
  j["version"] = kVersion;
  j["family"] = "P";
  j["a"] = r.a;
  j["b"] = r.b;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["error"] = r.error;
    return j;
  }
  j["complete"] = r.complete;
  j["embeddings"] = r.N.size();
  j["N"] = r.N;
  j["chi"] = r.chi;
  j["b2"] = r.b2;
  j["verdict"] = r.verdict;
  j["euler_F"] = r.euler_F;
  j["euler_G"] = r.euler_G;
  j["torsion_G"] = r.torsion_G;
  return j;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

CensusRecord compute_cell(int a, int b, bool timing) {
  CensusRecord r;
  r.a = a;
  r.b = b;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const StarPlumbing filling = make_P(a, b);
    const StarPlumbing cap = make_DGamma(a, b);
    if (!isomorphic(dual_cap(filling), cap)) throw DomainError("dual cap of P does not match the cap graph");
    const EnumerationResult res = enumerate(cap);
    r.complete = res.complete();
    for (const auto& e : res.embeddings) {
      r.N.push_back(e.N());
      r.chi.push_back(complement_euler(cap, e));
      r.b2.push_back(complement_betti2(cap, e));
    }
    r.verdict = outcome_name(single_blowdown_verdict(a, b).outcome);
    r.euler_F = euler_char(F_factorization(a, b));
    const FillingInvariants g = homology(G_factorization(a, b));
    r.euler_G = g.euler;
    for (const auto& t : g.torsion) r.torsion_G.push_back(t.str());
  } catch (const std::exception& e) {
    r = CensusRecord{};
    r.a = a;
    r.b = b;
    r.ok = false;
    r.error = e.what();
  }
  if (timing)
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::string CensusRecord::content_hash() const { return sha256_hex(body(*this).dump()); }

std::string CensusRecord::to_line() const {
  ordered_json j = body(*this);
  j["hash"] = content_hash();
  if (millis) j["millis"] = *millis;
  return j.dump();
}

std::vector<CensusRecord> run_census(const CensusOptions& options) {
  if (options.family != "P") throw DomainError("unknown census family '" + options.family + "'");
  if (options.a_min < 2 || options.b_min < 2 || options.a_min > options.a_max || options.b_min > options.b_max)
    throw DomainError("census ranges must satisfy 2 <= min <= max");
  std::vector<std::pair<int, int>> cells;
  for (int a = options.a_min; a <= options.a_max; ++a)
    for (int b = options.b_min; b <= options.b_max; ++b) cells.emplace_back(a, b);

  std::vector<CensusRecord> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();)
      out[i] = compute_cell(cells[i].first, cells[i].second, options.timing);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(options.workers, cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

AppendStats append_census(const std::string& path, const std::vector<CensusRecord>& records) {
  std::set<std::string> present;
  {
    std::ifstream in(path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        present.insert(nlohmann::json::parse(line).at("hash").get<std::string>());
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), line_no, path);
      }
    }
  }
  AppendStats stats;
  std::ofstream out(path, std::ios::app);
  if (!out) throw DomainError("cannot open " + path + " for appending");
  for (const auto& r : records) {
    if (present.count(r.content_hash())) {
      ++stats.skipped;
      continue;
    }
    out << r.to_line() << "\n";
    present.insert(r.content_hash());
    ++stats.written;
  }
  return stats;
}

}  // namespace starsurg
