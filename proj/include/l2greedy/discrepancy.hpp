#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "l2greedy/point.hpp"
#include "l2greedy/scalar.hpp"

namespace l2g {

enum class DiscrepancyKind { StarL2, ExtremeL2, PeriodicL2, StarSup };

std::string_view to_string(DiscrepancyKind kind);
/// "star-l2", "extreme-l2", "periodic-l2", "star-sup"; nullopt otherwise.
std::optional<DiscrepancyKind> parse_discrepancy_kind(std::string_view text);

/// Test box for the local discrepancy.
///
/// Anchored boxes are [0, upper); unanchored boxes [lower, upper) with
/// lower <= upper; periodic boxes are products of wrap-around intervals
/// I(l, u) = [l, u) if l <= u and [0, u) u [l, 1) otherwise.
struct BoxSpec {
  enum class Kind { Anchored, Unanchored, Periodic };

  Kind kind;
  UnitPoint lower;
  UnitPoint upper;

  static BoxSpec anchored(UnitPoint upper);
  static BoxSpec unanchored(UnitPoint lower, UnitPoint upper);
  static BoxSpec periodic(UnitPoint lower, UnitPoint upper);

  std::size_t dim() const { return upper.dim(); }
};

/// A_N(B) - N * volume(B), counted with half-open membership.
Scalar local_discrepancy(const BoxSpec& box, const PointList& pts);

// Squared L2 discrepancies from the closed forms. All are exact when every
// coordinate is exact and evaluated in compensated double arithmetic
// otherwise. Empty lists are rejected.
Scalar l2_star_sq(const PointList& pts);
Scalar l2_extreme_sq(const PointList& pts);
Scalar l2_periodic_sq(const PointList& pts);
/// Dispatches on kind; StarSup is rejected (use star_sup_1d).
Scalar l2_sq(DiscrepancyKind kind, const PointList& pts);

/// One-dimensional star L2 discrepancy from the sorted points:
/// N sum (y_n - (2n-1)/(2N))^2 + 1/12 (unnormalized, like the other evaluators).
Scalar l2_star_sq_sorted_1d(const PointList& pts);

// One-point recursions: given prev_sq for pts, the squared discrepancy of pts
// with y appended, in O(N d). pts may be empty when prev_sq is zero.
Scalar l2_star_sq_increment(const Scalar& prev_sq, const PointList& pts, const UnitPoint& y);
Scalar l2_extreme_sq_increment(const Scalar& prev_sq, const PointList& pts, const UnitPoint& y);
Scalar l2_periodic_sq_increment(const Scalar& prev_sq, const PointList& pts, const UnitPoint& y);
Scalar l2_sq_increment(DiscrepancyKind kind, const Scalar& prev_sq, const PointList& pts, const UnitPoint& y);

/// Squared discrepancy of every prefix 1..N via the recursions (O(N^2 d)).
std::vector<Scalar> l2_sq_curve(DiscrepancyKind kind, const PointList& pts);

/// sup_t |A_N([0,t)) - N t| over t in [0,1] for a 1D list. Duplicates allowed.
Scalar star_sup_1d(const PointList& pts);

/// star_sup_1d of every prefix 1..N.
std::vector<Scalar> star_sup_curve_1d(const PointList& pts);

}  // namespace l2g
