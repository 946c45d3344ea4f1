#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ks/multipartition.hpp"

namespace ks {

// Result of one verification sweep. `detail` carries a human-readable diff
// for the first failures encountered (empty on success).
struct SuiteResult {
  bool pass = true;
  std::string detail;
  long long checks = 0;

  void fail(const std::string& msg) {
    pass = false;
    if (detail.size() < 4000) detail += msg + "\n";
  }
};

// r = 1 oracle equivalence: the Weyl-sum single-variable polynomial equals
// the charge-statistic generating function for every dominant pair of
// partitions of n <= max_size (N = n).
SuiteResult charge_suite(int max_size);

// Canonical-bundle weight identities and SL-triviality for all
// 1 <= r, N <= max_rn.
SuiteResult weight_identity_suite(int max_rn);

// Partition-function DP against the truncated generating-product oracle on
// the full coordinate box, for each (r, N) shape given.
SuiteResult series_equivalence_suite(
    const std::vector<std::pair<int, int>>& shapes, int box_bound,
    int max_degree);

// Character decomposition of the graded Euler characteristic against the
// degree-truncated Kostka polynomials, including vanishing on nearby
// candidates that do not appear in the decomposition.
SuiteResult euler_decomposition_suite(const Multipartition& mu,
                                      int max_degree);

// One sweep over every ordered pair of multipartitions with r <= max_r and
// total size <= max_size (N = size), checking triangularity, the t = 0
// normalization, positivity and diagonal specialization together.
struct TableScanResult {
  bool triangularity_ok = true;
  bool constant_term_ok = true;
  bool positivity_ok = true;
  bool specialization_ok = true;
  long long pairs_checked = 0;
  long long nonzero_noncomparable = 0;  // reported; expected to stay 0
  std::string detail;
};

TableScanResult table_scan_suite(int max_r, long long max_size, int threads);

// Reduced-word construction checks: seeded random flag types (rejection
// sampled to valid ones), the standard flag types for r, N <= max_std, and
// the dimension-count identities for r, N <= max_dims.
SuiteResult words_suite(unsigned long long seed, int random_count,
                        int max_std, int max_dims);

}  // namespace ks
