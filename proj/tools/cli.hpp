#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace l2g::cli {

/// One row of the comparison dataset; discrepancies, not their squares.
struct CompareRow {
  std::size_t n;
  double l2_star_greedy;
  double l2_star_vdc_sym;
  double dstar_greedy;
  double dstar_vdc;
};

struct CompareSummary {
  /// Fraction of N <= n_max with L2(S*) < L2(symmetrized vdC).
  double fraction_l2_greedy_better;
  std::size_t window_lo;
  std::size_t window_hi;
  // Maxima over the window [window_lo, window_hi].
  double max_l2_over_sqrt_log_greedy;
  double max_l2_over_sqrt_log_vdc_sym;
  double max_dstar_over_log_greedy;
  double max_dstar_over_log_vdc;
};

/// Rows for N = 1..n_max. The window starts at 100 (or at 2 for n_max < 100).
std::vector<CompareRow> compare_dataset(std::size_t n_max);
CompareSummary summarize(const std::vector<CompareRow>& rows);

/// Runs the command line; returns the process exit code
/// (0 success, 1 verification or computation failure, 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace l2g::cli
