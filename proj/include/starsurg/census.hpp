#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace starsurg {

inline constexpr const char* kVersion = "starsurg 1.0.0";

struct CensusOptions {
  std::string family = "P";
  int a_min = 2, a_max = 5;
  int b_min = 2, b_max = 5;
  unsigned workers = 1;
  bool timing = false;
};

struct CensusRecord {
  int a = 0, b = 0;
  bool ok = true;
  std::string error;
  bool complete = true;  // enumeration finished within budget
  std::vector<int> N, chi, b2;
  std::string verdict;
  long euler_F = 0, euler_G = 0;
  std::vector<std::string> torsion_G;
  std::optional<double> millis;

  // One JSON line; "hash" covers every field except the timing.
  std::string to_line() const;
  std::string content_hash() const;
};

// Records in (a, b) order regardless of the number of workers.
std::vector<CensusRecord> run_census(const CensusOptions& options);

struct AppendStats {
  std::size_t written = 0;
  std::size_t skipped = 0;
};

// Appends records whose content hash is not already present in the file.
AppendStats append_census(const std::string& path, const std::vector<CensusRecord>& records);

}  // namespace starsurg
