#pragma once

// Named verification suites over parameter grids.  Each suite expands into a
// deterministic list of records; execution order is parallel but the output
// order is fixed by the grid.  Usage-level problems (unknown suite, values
// outside a suite's domain, selections that produce no checks) raise
// std::invalid_argument; per-record domain failures become skipped records.

#include <string>
#include <vector>

#include "falsetheta/report.hpp"

namespace falsetheta {

struct GridSelection {
  std::vector<long> m_values;  // empty = suite default
  std::vector<long> a_values;
  std::vector<long> n_values;
  std::vector<long> m_root_values;  // the M in zeta_N^M
};

struct SuiteOptions {
  std::string suite = "all";
  GridSelection grid;
  long series_order = 60;     // x-order for the series identity suite
  long pair_order = 40;       // q-order for Bailey pair checks
  long pair_n_max = 6;
  long transform_n_max = 5;
  double tolerance = 1e-6;    // radial extrapolation tolerance
  int jobs = 0;               // 0 = hardware concurrency
};

std::vector<std::string> suite_names();
std::vector<VerificationRecord> run_suite(const SuiteOptions& options);
bool all_equal_or_skipped(const std::vector<VerificationRecord>& records);

}  // namespace falsetheta
