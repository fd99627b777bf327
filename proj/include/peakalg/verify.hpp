#pragma once

#include <string>
#include <vector>

namespace peakalg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure (witness) or with a summary
};

bool all_pass(const std::vector<CheckResult>& rs);

/* The named suites behind `verify --suite ...` and the acceptance tests.
 * Sizes default to the documented bounds; smaller values are for quick
 * runs, larger ones are allowed. */
std::vector<CheckResult> verify_tables();
std::vector<CheckResult> verify_relations();
std::vector<CheckResult> verify_euler(int max_n = 12);
std::vector<CheckResult> verify_oracles(int max_n = 7, int random_vectors = 50,
                                        unsigned seed = 20240915);
std::vector<CheckResult> verify_pieri(int max_m = 5, int max_s = 3);
std::vector<CheckResult> verify_dual(int max_n = 6, int matrix_max_n = 8);
std::vector<CheckResult> verify_classical();
std::vector<CheckResult> verify_expansions();
std::vector<CheckResult> verify_tableaux();

struct ScanRow {
  int n = 0;
  bool nonnegative = false;
  bool integral = false;
  bool unitriangular = false;
  std::string witness;  // first offending entry if any
};

/* Expands Pi over the normalized S basis for n = 3..max_n and tests the
 * positivity / integrality / unitriangularity claims.  jobs > 1 splits
 * degrees across threads; results are independent of the job count. */
std::vector<ScanRow> scan_conjecture(int max_n, int jobs = 1);

}  // namespace peakalg
