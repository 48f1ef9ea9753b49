#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "l2greedy/discrepancy.hpp"
#include "l2greedy/greedy.hpp"
#include "l2greedy/rational.hpp"

namespace l2g {

using Parameters = std::vector<std::pair<std::string, std::string>>;

struct CaseResult {
  Parameters parameters;
  bool passed = false;
  /// Offending value(s); always present on failure.
  std::string witness;
};

/// Pass/fail record of one verification suite.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void add(Parameters parameters, bool passed, std::string witness = {});
  /// Appends every case of other; parameters get a "suite" entry when the names differ.
  void merge(const VerificationReport& other);

  const std::string& suite() const { return suite_; }
  const std::vector<CaseResult>& cases() const { return cases_; }
  std::size_t passed_count() const;
  std::size_t failed_count() const { return cases_.size() - passed_count(); }
  bool ok() const { return failed_count() == 0; }

  /// Summary line plus one line per failing case (all cases when verbose).
  std::string to_text(bool verbose = false) const;
  /// One JSON object per case: suite, case, parameters, status, witness.
  std::string to_jsonl() const;

 private:
  std::string suite_;
  std::vector<CaseResult> cases_;
};

/// Uniform rational a/b in [0,1) with b drawn from 1..max_den.
Rational random_rational(std::mt19937_64& rng, std::uint64_t max_den = 1U << 16);

// ---------------------------------------------------------------------------
// Auxiliary objective G_N(x) = -N x (1-x) + 2 sum_{n<N} (min(phi(n), x) - phi(n) x).

Rational eval_G(std::uint64_t n, const Rational& x);

/// Exact set of global minimizers of G_N over [0,1), ascending.
std::vector<Rational> argmin_G(std::uint64_t n);

/// G_N(x + l 2^-r) == G_N(x) for random x in [0, 2^-r), all l < 2^r, N = 2^r m.
VerificationReport check_G_periodicity(std::uint64_t n, std::size_t samples, std::uint64_t seed = 1);

/// G_m(2^r x) == 2^r G_N(x) for random x in [0, 2^-r).
VerificationReport check_G_scaling(std::uint64_t n, std::size_t samples, std::uint64_t seed = 1);

/// min argmin G_N == phi(N) for all N <= n_max, plus argmin G_{2^r} == Gamma_{2^r}
/// and singleton argmin sets for odd N >= 3.
VerificationReport check_toshow(std::uint64_t n_max);

/// Periodicity and scaling for every N <= n_max, plus check_toshow(toshow_max).
VerificationReport check_appendix(std::uint64_t n_max, std::uint64_t toshow_max, std::size_t samples,
                                  std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Structural checks on the greedy sequences.

/// Elements of the canonical star sequence (start {1/2}) up to n_max, and of
/// random_starts random start sets of size start_size extended to extend_to,
/// are (2l-1)/(2M) at index M and differ from all predecessors.
VerificationReport check_theorem4(std::size_t n_max, std::size_t random_starts = 20, std::size_t start_size = 5,
                                  std::size_t extend_to = 200, std::uint64_t seed = 1);

/// For every prefix of the canonical star sequence up to n_max: the interior
/// gaps and the left sentinel gap y_1 - 0 are >= 1/(2N). The right sentinel gap
/// 1 - y_N is reported as a parameter, not asserted. Also checks that each new
/// point lands in an empty cell [(l-1)/(N+1), l/(N+1)).
VerificationReport check_theorem5(std::size_t n_max);

/// The 1D extreme/periodic greedy from {0} reproduces phi(0..n-1) exactly.
VerificationReport check_theorem6(std::size_t n);

/// Prefix bound L^2_N <= c (N - k + 1) and the per-step averaging bound for
/// the greedy construction of the given kind. d = 1 runs exactly; d >= 2 uses
/// the grid search. Start sets: {1/2}^d for star, the origin otherwise.
VerificationReport check_theorem_bounds(DiscrepancyKind kind, std::size_t dim, std::size_t n,
                                        const SearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Brute-force oracles.

/// Grid point j/resolution (j = 0..resolution-1) minimizing objective; smallest j on ties.
Rational brute_force_argmin(const std::function<double(double)>& objective, std::uint64_t resolution);

/// f_N of a star state as a double-precision function.
std::function<double(double)> star_objective_fn(const GreedyState& state);
/// h_N of an extreme/periodic state as a double-precision function.
std::function<double(double)> periodic_objective_fn(const GreedyState& state);

/// Brute-force argmin agreement on random star and periodic states (within
/// max(1e-6, 1/resolution) of the exact argmin set, and never strictly better),
/// plus the closed-form and recursion equivalences on random lists.
VerificationReport check_oracles(std::size_t states, std::uint64_t resolution, std::uint64_t seed = 1);

}  // namespace l2g
