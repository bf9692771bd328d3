#pragma once

// Identity-verification suites shared by the CLI and the test binaries.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qeuler {

struct CheckRecord {
  std::string suite;
  std::string id;
  std::string range;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool passed() const;
  /// Deterministic listing followed by a "# timing" section.
  std::string render() const;
};

struct VerifyOptions {
  /// Overrides the primary size bound of each suite.
  std::optional<int> n_max;
  unsigned jobs = 1;
  std::uint64_t seed = 20080519;
  /// Per-suite (or per budget class: permutations, tableaux, paths, ansatz)
  /// n-max overrides, e.g. from QEULER_BUDGET_OVERRIDE.
  std::map<std::string, int> overrides;
};

/// Parses "suite=n" pairs separated by ',' or ';'. Throws
/// std::invalid_argument on malformed input.
std::map<std::string, int> parse_budget_overrides(const std::string& text);

/// Suite names accepted by run_suite, including "all".
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite and BudgetExceeded when
/// a bound is above what the library accepts.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace qeuler
