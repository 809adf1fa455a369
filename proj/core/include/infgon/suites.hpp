#pragma once

// Exhaustive agreement suites over fixed windows. Each suite compares two
// independent routes to the same numbers and reports the first mismatch.

#include <string>
#include <vector>

namespace infgon {

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;       // counts on success, first failure otherwise
  double seconds = 0.0;
  double time_limit = 0.0;  // exceeded limit fails the suite
};

SuiteResult suite_crossing_ext_bridge();     // 1
SuiteResult suite_serre_duality();           // 2
SuiteResult suite_direct_towers();           // 3
SuiteResult suite_inverse_towers();          // 4
SuiteResult suite_prufer_double_tower();     // 5
SuiteResult suite_classification_fixtures(); // 6
SuiteResult suite_zigzag_witnesses();        // 7
SuiteResult suite_graded_modules();          // 8
SuiteResult suite_shift_equivariance();      // 9

// Suites 1..9 in order.
std::vector<SuiteResult> run_all_suites();
// Throws DomainError for an id outside 1..9.
SuiteResult run_suite(int id);

}  // namespace infgon
