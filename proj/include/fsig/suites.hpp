#pragma once

#include <string>
#include <vector>

#include "fsig/analysis.hpp"

namespace fsig {

// Named verification suites runnable from the CLI and the acceptance harness.
// Instances (grids, divisors, prime/level sweeps) are fixed and documented in
// the implementation so runs are reproducible byte for byte.
std::vector<std::string> suite_names();

CheckReport run_suite(const std::string& name, Int p_filter = 0, int e_filter = 0);

// "all" expands to every suite in catalog order.
std::vector<CheckReport> run_suites(const std::string& name, Int p_filter = 0, int e_filter = 0);

// One self-describing record with nested per-suite records; deterministic.
std::string reports_to_json(const std::vector<CheckReport>& reports);

// e.g. "formulas: 101/101 checks passed"
std::string report_summary(const CheckReport& report);

bool all_passed(const std::vector<CheckReport>& reports);

} // namespace fsig
