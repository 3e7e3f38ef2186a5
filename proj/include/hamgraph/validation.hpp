#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hamgraph {

// Thrown on violated preconditions, malformed input files, and infeasible
// surgery requests. Validation routines report instead of throwing.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Violation {
  std::string code;    // stable machine-readable tag
  std::string detail;  // human-readable, names the offending vertices/edges
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string detail) {
    violations.push_back({std::move(code), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  std::string summary() const {
    if (ok()) return "valid";
    std::string out;
    for (const auto& v : violations) {
      out += v.code;
      out += ": ";
      out += v.detail;
      out += '\n';
    }
    return out;
  }
};

}  // namespace hamgraph
