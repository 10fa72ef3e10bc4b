#pragma once

#include <stdexcept>
#include <string>

namespace starsurg {

// Precondition violated by the caller (bad parameters, wrong graph side, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input. Carries the 1-based line number when known, and
// the file name once a caller attaches it.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, int line = 0, const std::string& file = "")
      : std::runtime_error(render(detail, line, file)), detail_(detail), line_(line) {}
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  static std::string render(const std::string& detail, int line, const std::string& file) {
    std::string where = file;
    if (line > 0) where += file.empty() ? "line " + std::to_string(line) : ":" + std::to_string(line);
    return where.empty() ? detail : where + ": " + detail;
  }
  std::string detail_;
  int line_;
};

// A search or word-length guard was hit. Never silently truncated.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace starsurg
