#include "l2greedy/point.hpp"

#include <algorithm>
#include <string>

#include "l2greedy/error.hpp"

namespace l2g {

bool UnitPoint::is_exact() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_exact(); });
}

PointList::PointList(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DomainError("point dimension must be positive");
}

PointList PointList::from_rationals(const std::vector<Rational>& values) {
  PointList out(1);
  for (const auto& v : values) out.push_back(UnitPoint{Scalar(v)});
  return out;
}

PointList PointList::from_doubles_1d(const std::vector<double>& values) {
  return from_doubles(1, values);
}

PointList PointList::from_doubles(std::size_t dim, const std::vector<double>& values) {
  PointList out(dim);
  if (values.size() % dim != 0) throw DomainError("coordinate count is not a multiple of the dimension");
  for (std::size_t i = 0; i < values.size(); i += dim) {
    std::vector<Scalar> c(values.begin() + static_cast<std::ptrdiff_t>(i),
                          values.begin() + static_cast<std::ptrdiff_t>(i + dim));
    out.push_back(UnitPoint(std::move(c)));
  }
  return out;
}

void PointList::push_back(UnitPoint p) {
  if (p.dim() != dim_) {
    throw DomainError("point of dimension " + std::to_string(p.dim()) + " added to list of dimension " +
                      std::to_string(dim_));
  }
  for (const auto& c : p.coords) {
    const bool inside = c.is_exact() ? (c.exact().sign() >= 0 && c.exact() <= Rational(1))
                                     : (c.to_double() >= 0.0 && c.to_double() <= 1.0);
    if (!inside) throw DomainError("coordinate " + c.to_string() + " outside [0,1]");
  }
  points_.push_back(std::move(p));
}

bool PointList::is_exact() const {
  return std::all_of(points_.begin(), points_.end(), [](const UnitPoint& p) { return p.is_exact(); });
}

std::vector<Rational> PointList::rationals_1d() const {
  if (dim_ != 1) throw DomainError("expected a one-dimensional point list");
  return to_rationals();
}

std::vector<double> PointList::to_doubles() const {
  std::vector<double> out;
  out.reserve(points_.size() * dim_);
  for (const auto& p : points_) {
    for (const auto& c : p.coords) out.push_back(c.to_double());
  }
  return out;
}

std::vector<Rational> PointList::to_rationals() const {
  std::vector<Rational> out;
  out.reserve(points_.size() * dim_);
  for (const auto& p : points_) {
    for (const auto& c : p.coords) out.push_back(c.exact());
  }
  return out;
}

PointList PointList::prefix(std::size_t n) const {
  PointList out(dim_);
  out.points_.assign(points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
  return out;
}

}  // namespace l2g
