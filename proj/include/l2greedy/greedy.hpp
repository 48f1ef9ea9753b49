#pragma once

#include <cstddef>
#include <vector>

#include "l2greedy/discrepancy.hpp"
#include "l2greedy/point.hpp"
#include "l2greedy/rational.hpp"
#include "l2greedy/scalar.hpp"

namespace l2g {

/// Incremental state of one exact one-dimensional greedy construction.
///
/// Keeps the points in insertion order and in sorted order y_1 <= ... <= y_N
/// (sentinels y_0 = 0 and y_{N+1} = 1 are implicit), the suffix sums
/// S_k = sum_{n >= k} y_n for k = 1..N+1, the plain sums of x_n and x_n^2,
/// and the current squared discrepancy of the chosen kind.
class GreedyState {
 public:
  /// kind must be one of the L2 kinds. The start set may be empty.
  GreedyState(DiscrepancyKind kind, const std::vector<Rational>& start);

  DiscrepancyKind kind() const { return kind_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Rational>& points() const { return points_; }
  const std::vector<Rational>& sorted() const { return sorted_; }
  const Rational& sum() const { return sum_; }
  const Rational& sum_sq() const { return sum_sq_; }
  /// Squared discrepancy (of kind()) of the current points.
  const Rational& current_sq() const { return current_sq_; }

  /// S_k for 1 <= k <= N+1 (S_{N+1} = 0).
  const Rational& suffix_sum(std::size_t k) const { return suffix_[k - 1]; }
  /// Number of stored points <= x.
  std::size_t count_le(const Rational& x) const;

  /// Appends x in O(N) and updates every cache.
  void push(const Rational& x);

  /// The point list in insertion order.
  PointList to_point_list() const { return PointList::from_rationals(points_); }

 private:
  DiscrepancyKind kind_;
  std::vector<Rational> points_;
  std::vector<Rational> sorted_;
  std::vector<Rational> suffix_;
  Rational sum_;
  Rational sum_sq_;
  Rational current_sq_;
};

// ---------------------------------------------------------------------------
// Star L2, dimension 1.

/// f_N(x) = -2 sum_n max(x_n, x) + (N+1) x^2 - x for x in [0,1).
/// Exact for exact x; evaluated in double otherwise.
Scalar eval_star_objective(const GreedyState& state, const Scalar& x);

/// Smallest minimizer of f_N over [0,1); searches Gamma_{N+1} exactly.
Rational next_star_1d(const GreedyState& state);

/// All points of Gamma_{N+1} attaining the minimum of f_N, ascending.
std::vector<Rational> star_argmin_set(const GreedyState& state);

/// Extends start to n points; an empty start means {1/2}.
PointList greedy_star_1d(const PointList& start, std::size_t n);

// ---------------------------------------------------------------------------
// Extreme and periodic L2, dimension 1.

enum class PeriodicObjective { H, G };

/// h_N(x) = sum_n ((x_n - x)^2 - |x_n - x|), or g_N(x) = -N x (1-x) +
/// 2 sum_n (min(x_n, x) - x_n x). Both share their minimizers.
Scalar eval_periodic_objective(const GreedyState& state, const Scalar& x,
                               PeriodicObjective which = PeriodicObjective::H);

/// Smallest global minimizer of h_N over [0,1). Each gap [y_{k-1}, y_k]
/// contributes its clamped parabola vertex as the single candidate.
Rational next_periodic_1d(const GreedyState& state);

/// Every global minimizer of the chosen objective over [0,1), ascending.
std::vector<Rational> periodic_argmin_set(const GreedyState& state,
                                          PeriodicObjective which = PeriodicObjective::H);

/// Extends start to n points; an empty start means {0}.
PointList greedy_periodic_1d(const PointList& start, std::size_t n);

/// State after running the matching 1D construction (star for StarL2,
/// Algorithm-2 style for the other kinds) up to n points.
GreedyState run_greedy_1d(DiscrepancyKind kind, const std::vector<Rational>& start, std::size_t n);

// ---------------------------------------------------------------------------
// d-dimensional greedy (double precision, candidate search).

struct SearchConfig {
  /// Midpoint grid points per axis for the initial sweep.
  std::size_t grid_resolution = 32;
  /// Number of local refinements around the incumbent.
  std::size_t refinement_rounds = 3;
  /// Worker threads for candidate evaluation; 0 reads L2GREEDY_THREADS
  /// (default 1). Never changes the selected point.
  std::size_t threads = 0;
};

/// Per-step averaging bound on the squared-discrepancy increase:
/// 1/2^d - 1/3^d for star and periodic, 1/6^d - 1/12^d for extreme.
double averaging_bound(DiscrepancyKind kind, std::size_t dim);

struct GreedyNdResult {
  PointList points;
  /// Squared discrepancy of every prefix 1..N.
  std::vector<double> squared;
  /// increments[i] = squared[i] - squared[i-1], with squared[-1] = 0.
  std::vector<double> increments;
};

/// Greedy extension of a nonempty start set to n points by minimizing
/// f_{N,d}, g_{N,d} or h_{N,d} over a midpoint grid plus refinements.
/// Ties go to the lexicographically smallest candidate. Throws
/// SearchQualityError if a step exceeds averaging_bound().
GreedyNdResult greedy_nd_run(DiscrepancyKind kind, const PointList& start, std::size_t n,
                             const SearchConfig& cfg);

PointList greedy_nd(DiscrepancyKind kind, const PointList& start, std::size_t n, const SearchConfig& cfg);

/// f_{N,d}, g_{N,d} or h_{N,d} at y, given the row-major points x (double).
double nd_objective(DiscrepancyKind kind, const std::vector<double>& x, std::size_t dim,
                    const std::vector<double>& y);

}  // namespace l2g
