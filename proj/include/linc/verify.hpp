#pragma once
// Reverification suites: every documented construction is rebuilt from its
// definition and its parameters, weight enumerators and optimality verdicts
// are recomputed exactly, including the randomized identity checks. Each
// suite yields named rows so a driver can print a pass/fail table; nothing
// here consults best-known-code tables.
#include <string>
#include <vector>

namespace linc {

struct SuiteRow {
  std::string key;     // "suite/check", stable across runs
  bool pass = false;
  std::string detail;  // the claim checked, with observed values on failure
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  bool all_pass() const;
};

// Suite names in canonical execution order; "all" is accepted by run_suite
// but not listed.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". A nonempty corrupt_key flips
// the outcome of the matching row (appending a marker to its detail); the
// test harness uses this to prove that a failing row reaches the exit
// status. An unmatched corrupt_key appends a synthetic failing row.
SuiteReport run_suite(const std::string& name,
                      const std::string& corrupt_key = "");

}  // namespace linc
