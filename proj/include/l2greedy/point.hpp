#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "l2greedy/scalar.hpp"

namespace l2g {

/// A point of the closed unit cube [0,1]^d.
struct UnitPoint {
  std::vector<Scalar> coords;

  UnitPoint() = default;
  explicit UnitPoint(std::vector<Scalar> c) : coords(std::move(c)) {}
  UnitPoint(std::initializer_list<Scalar> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  bool is_exact() const;
  const Scalar& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const UnitPoint&, const UnitPoint&) = default;
};

/// Ordered prefix x_1, ..., x_N of a sequence in [0,1]^d. Order is insertion order.
class PointList {
 public:
  explicit PointList(std::size_t dim);

  /// One-dimensional list from exact values.
  static PointList from_rationals(const std::vector<Rational>& values);
  /// One-dimensional list from doubles.
  static PointList from_doubles_1d(const std::vector<double>& values);
  /// Row-major doubles, `values.size()` must be a multiple of `dim`.
  static PointList from_doubles(std::size_t dim, const std::vector<double>& values);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  /// Throws DomainError on dimension mismatch or a coordinate outside [0,1].
  void push_back(UnitPoint p);

  const UnitPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<UnitPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// True when every coordinate is exact.
  bool is_exact() const;

  /// Coordinates of a one-dimensional exact list. Throws if dim != 1 or inexact.
  std::vector<Rational> rationals_1d() const;
  /// Row-major copy of all coordinates as doubles.
  std::vector<double> to_doubles() const;
  /// Row-major exact coordinates. Throws if any coordinate is inexact.
  std::vector<Rational> to_rationals() const;

  /// First n points.
  PointList prefix(std::size_t n) const;

  friend bool operator==(const PointList&, const PointList&) = default;

 private:
  std::size_t dim_;
  std::vector<UnitPoint> points_;
};

}  // namespace l2g
