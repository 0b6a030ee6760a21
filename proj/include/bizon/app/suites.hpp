#pragma once

#include "bizon/app/corpus.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bizon::app {

/// One row of the complete-graph reference tables.
struct ReferenceRow {
  int n = 0;
  int r = 0;
  std::vector<std::uint64_t> coefficients;
  std::uint64_t dimension = 0;
};

/// Reference Hilbert functions of K_n: r = 1 for n = 2..9, r = 0 for
/// n = 2..9, r = -1 for n = 3..9.
const std::vector<ReferenceRow>& reference_table();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  /// Informational lines (shape statistics, seeds), never failures.
  std::vector<std::string> notes;
  bool passed() const;
};

struct SuiteOptions {
  /// Largest K_n in table reproductions.
  int max_n = 7;
  std::uint64_t seed = kDefaultCorpusSeed;
  unsigned threads = 0;
};

/// tables, spanning, delcon, oracle, parking, polytope.
const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" runs every suite into one report.
/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts);

void print_report(std::ostream& out, const SuiteReport& report);

} // namespace bizon::app
