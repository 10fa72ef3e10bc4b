#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "starsurg/census.hpp"
#include "starsurg/errors.hpp"

using namespace starsurg;

namespace {

std::string joined(const std::vector<CensusRecord>& rs) {
  std::string out;
  for (const auto& r : rs) out += r.to_line() + "\n";
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CensusOptions small(unsigned workers) {
  CensusOptions o;
  o.a_min = 2;
  o.a_max = 3;
  o.b_min = 2;
  o.b_max = 3;
  o.workers = workers;
  return o;
}

}  // namespace

TEST_CASE("census records") {
  const auto rs = run_census(small(1));
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].a == 2);
  CHECK(rs[0].b == 2);
  CHECK(rs[1].b == 3);
  const CensusRecord& r = rs[0];
  CHECK(r.ok);
  CHECK(r.complete);
  CHECK(r.N == std::vector<int>{10, 6});
  CHECK(r.chi == std::vector<int>{6, 2});
  CHECK(r.b2 == std::vector<int>{5, 1});
  CHECK(r.verdict == "RuledOut");
  CHECK(r.euler_F == 6);
  CHECK(r.euler_G == 2);
  CHECK(r.torsion_G == std::vector<std::string>{"4"});
  const auto j = nlohmann::json::parse(r.to_line());
  CHECK(j["a"] == 2);
  CHECK(j["hash"] == r.content_hash());
  CHECK(r.content_hash().size() == 64);
}

TEST_CASE("census verdicts follow divisibility") {
  CensusOptions o;
  o.a_min = o.a_max = 5;
  o.b_min = o.b_max = 3;
  const auto rs = run_census(o);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == "Inconclusive");
  CHECK(rs[0].torsion_G == std::vector<std::string>{"8"});
}

TEST_CASE("census output does not depend on the number of workers") {
  const std::string one = joined(run_census(small(1)));
  CHECK(joined(run_census(small(1))) == one);
  CHECK(joined(run_census(small(3))) == one);
  CHECK(joined(run_census(small(8))) == one);
}

TEST_CASE("timing is excluded from the hash") {
  CensusOptions o = small(1);
  o.timing = true;
  const auto timed = run_census(o);
  const auto plain = run_census(small(1));
  for (std::size_t i = 0; i < timed.size(); ++i) {
    CHECK(timed[i].millis.has_value());
    CHECK(timed[i].content_hash() == plain[i].content_hash());
  }
}

TEST_CASE("append is idempotent") {
  const auto dir = std::filesystem::temp_directory_path() / "starsurg_census_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "census.ndjson";
  std::filesystem::remove(path);
  const auto rs = run_census(small(2));
  AppendStats first = append_census(path.string(), rs);
  CHECK(first.written == 4);
  CHECK(first.skipped == 0);
  const std::string once = slurp(path);
  AppendStats second = append_census(path.string(), rs);
  CHECK(second.written == 0);
  CHECK(second.skipped == 4);
  CHECK(slurp(path) == once);

  std::ofstream(path, std::ios::app) << "not json\n";
  CHECK_THROWS_AS(append_census(path.string(), rs), ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("invalid census ranges") {
  CensusOptions o = small(1);
  o.a_min = 4;
  o.a_max = 3;
  CHECK_THROWS_AS(run_census(o), DomainError);
  CensusOptions fam = small(1);
  fam.family = "Q";
  CHECK_THROWS_AS(run_census(fam), DomainError);
}
