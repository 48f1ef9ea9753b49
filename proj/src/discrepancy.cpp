#include "l2greedy/discrepancy.hpp"

#include <algorithm>
#include <span>
#include <string>

#include "kernels.hpp"
#include "l2greedy/error.hpp"

namespace l2g {

using detail::inverse_power;
using detail::ratio;
using detail::Sum;

namespace {

// Row-major coordinates of n points in dimension d.
template <class T>
struct Coords {
  std::vector<T> x;
  std::size_t n = 0;
  std::size_t d = 0;

  std::span<const T> point(std::size_t i) const { return {x.data() + i * d, d}; }
};

template <class T>
Coords<T> coords_of(const PointList& pts);

template <>
Coords<Rational> coords_of<Rational>(const PointList& pts) {
  return {pts.to_rationals(), pts.size(), pts.dim()};
}

template <>
Coords<double> coords_of<double>(const PointList& pts) {
  return {pts.to_doubles(), pts.size(), pts.dim()};
}

template <class T>
std::vector<T> coords_of(const UnitPoint& p);

template <>
std::vector<Rational> coords_of<Rational>(const UnitPoint& p) {
  std::vector<Rational> out;
  for (const auto& c : p.coords) out.push_back(c.exact());
  return out;
}

template <>
std::vector<double> coords_of<double>(const UnitPoint& p) {
  std::vector<double> out;
  for (const auto& c : p.coords) out.push_back(c.to_double());
  return out;
}

template <class T, class F>
T product(std::span<const T> a, F factor) {
  T out(1);
  for (const auto& v : a) out *= factor(v);
  return out;
}

template <class T, class F>
T product(std::span<const T> a, std::span<const T> b, F factor) {
  T out(1);
  for (std::size_t i = 0; i < a.size(); ++i) out *= factor(a[i], b[i]);
  return out;
}

// Adds sum_{n,m} prod_i pair(x_{n,i}, x_{m,i}) as diagonal + 2 * upper triangle.
template <class T, class F>
void add_pair_sum(Sum<T>& acc, const Coords<T>& c, F pair) {
  for (std::size_t n = 0; n < c.n; ++n) {
    const auto xn = c.point(n);
    acc.add(product<T>(xn, xn, pair));
    for (std::size_t m = n + 1; m < c.n; ++m) acc.add_product(T(2), product<T>(xn, c.point(m), pair));
  }
}

// Adds -coef * sum_n prod_i single(x_{n,i}).
template <class T, class F>
void add_single_sum(Sum<T>& acc, const T& coef, const Coords<T>& c, F single) {
  for (std::size_t n = 0; n < c.n; ++n) acc.add_product(-coef, product<T>(c.point(n), single));
}

// 2 / 2^d == 1 / 2^(d-1)
template <class T>
T half_power(std::size_t d) {
  return T(2) * inverse_power<T>(2, d);
}

template <class T>
T int_power(long long base, std::size_t d) {
  T out(1);
  for (std::size_t i = 0; i < d; ++i) out *= T(base);
  return out;
}

// Everything enters one accumulator: the three parts are O(N^2) and cancel.
template <class T>
T star_direct(const Coords<T>& c) {
  const T n(static_cast<long long>(c.n));
  Sum<T> acc;
  acc.add_ratio(n * n, int_power<T>(3, c.d));
  add_single_sum(acc, n * half_power<T>(c.d), c, detail::star_single<T>);
  add_pair_sum(acc, c, detail::star_pair<T>);
  return acc.value();
}

template <class T>
T extreme_direct(const Coords<T>& c) {
  const T n(static_cast<long long>(c.n));
  Sum<T> acc;
  acc.add_ratio(n * n, int_power<T>(12, c.d));
  add_single_sum(acc, n * half_power<T>(c.d), c, detail::extreme_single<T>);
  add_pair_sum(acc, c, detail::extreme_pair<T>);
  return acc.value();
}

template <class T>
T periodic_direct(const Coords<T>& c) {
  const T n(static_cast<long long>(c.n));
  Sum<T> acc;
  acc.add_ratio(-(n * n), int_power<T>(3, c.d));
  add_pair_sum(acc, c, detail::periodic_pair<T>);
  return acc.value();
}

template <class T>
T direct(DiscrepancyKind kind, const Coords<T>& c) {
  switch (kind) {
    case DiscrepancyKind::StarL2:
      return star_direct(c);
    case DiscrepancyKind::ExtremeL2:
      return extreme_direct(c);
    case DiscrepancyKind::PeriodicL2:
      return periodic_direct(c);
    case DiscrepancyKind::StarSup:
      break;
  }
  throw DomainError("star-sup is not an L2 discrepancy");
}

// Squared discrepancy after appending y to the first n points of c.
template <class T>
T increment(DiscrepancyKind kind, const T& prev, const Coords<T>& c, std::size_t n, std::span<const T> y) {
  const std::size_t d = c.d;
  const T count(static_cast<long long>(n));
  const T two_n_plus_one(static_cast<long long>(2 * n + 1));
  Sum<T> singles, pairs;
  switch (kind) {
    case DiscrepancyKind::StarL2: {
      for (std::size_t m = 0; m < n; ++m) {
        const auto xm = c.point(m);
        singles.add(product<T>(xm, detail::star_single<T>));
        pairs.add(product<T>(xm, y, detail::star_pair<T>));
      }
      const T half = half_power<T>(d);
      return prev + two_n_plus_one * inverse_power<T>(3, d) - half * singles.value() -
             (count + T(1)) * half * product<T>(y, detail::star_single<T>) + T(2) * pairs.value() +
             product<T>(y, [](const T& v) { return T(1) - v; });
    }
    case DiscrepancyKind::ExtremeL2: {
      for (std::size_t m = 0; m < n; ++m) {
        const auto xm = c.point(m);
        singles.add(product<T>(xm, detail::extreme_single<T>));
        pairs.add(product<T>(xm, y, detail::extreme_pair<T>));
      }
      const T half = half_power<T>(d);
      return prev + two_n_plus_one * inverse_power<T>(12, d) - half * singles.value() +
             (T(1) - (count + T(1)) * half) * product<T>(y, detail::extreme_single<T>) + T(2) * pairs.value();
    }
    case DiscrepancyKind::PeriodicL2: {
      for (std::size_t m = 0; m < n; ++m) pairs.add(product<T>(c.point(m), y, detail::periodic_pair<T>));
      return prev - two_n_plus_one * inverse_power<T>(3, d) + inverse_power<T>(2, d) + T(2) * pairs.value();
    }
    case DiscrepancyKind::StarSup:
      break;
  }
  throw DomainError("star-sup has no L2 recursion");
}

void require_nonempty(const PointList& pts) {
  if (pts.empty()) throw DomainError("discrepancy of an empty point list");
}

Scalar evaluate_direct(DiscrepancyKind kind, const PointList& pts) {
  require_nonempty(pts);
  if (pts.is_exact()) return Scalar(direct(kind, coords_of<Rational>(pts)));
  return Scalar(direct(kind, coords_of<double>(pts)));
}

Scalar evaluate_increment(DiscrepancyKind kind, const Scalar& prev, const PointList& pts, const UnitPoint& y) {
  if (y.dim() != pts.dim()) throw DomainError("dimension mismatch between point list and new point");
  if (prev.is_exact() && pts.is_exact() && y.is_exact()) {
    const auto c = coords_of<Rational>(pts);
    const auto yc = coords_of<Rational>(y);
    return Scalar(increment<Rational>(kind, prev.exact(), c, c.n, yc));
  }
  const auto c = coords_of<double>(pts);
  const auto yc = coords_of<double>(y);
  return Scalar(increment<double>(kind, prev.to_double(), c, c.n, yc));
}

template <class T>
std::vector<Scalar> curve(DiscrepancyKind kind, const Coords<T>& c) {
  std::vector<Scalar> out;
  out.reserve(c.n);
  T current{};
  for (std::size_t n = 0; n < c.n; ++n) {
    current = increment<T>(kind, current, c, n, c.point(n));
    out.emplace_back(current);
  }
  return out;
}

// Unnormalized sup-norm star discrepancy of sorted values:
// max_n max(n - N y_n, N y_n - (n - 1)), n 1-based.
template <class T>
T star_sup_sorted(const std::vector<T>& sorted) {
  const T count(static_cast<long long>(sorted.size()));
  T best(0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const T scaled = count * sorted[i];
    const T above = T(static_cast<long long>(i + 1)) - scaled;
    const T below = scaled - T(static_cast<long long>(i));
    if (best < above) best = above;
    if (best < below) best = below;
  }
  return best;
}

template <class T>
std::vector<Scalar> star_sup_curve(const std::vector<T>& values) {
  std::vector<Scalar> out;
  out.reserve(values.size());
  std::vector<T> sorted;
  sorted.reserve(values.size());
  for (const auto& v : values) {
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
    out.emplace_back(star_sup_sorted(sorted));
  }
  return out;
}

bool contains(const BoxSpec& box, const UnitPoint& p) {
  for (std::size_t i = 0; i < box.dim(); ++i) {
    const Scalar& x = p[i];
    const Scalar& hi = box.upper[i];
    switch (box.kind) {
      case BoxSpec::Kind::Anchored:
        if (!(x < hi)) return false;
        break;
      case BoxSpec::Kind::Unanchored:
        if (x < box.lower[i] || !(x < hi)) return false;
        break;
      case BoxSpec::Kind::Periodic: {
        const Scalar& lo = box.lower[i];
        const bool inside = (hi < lo) ? (x < hi || !(x < lo)) : (!(x < lo) && x < hi);
        if (!inside) return false;
        break;
      }
    }
  }
  return true;
}

Scalar volume(const BoxSpec& box) {
  Scalar v(1);
  for (std::size_t i = 0; i < box.dim(); ++i) {
    const Scalar& hi = box.upper[i];
    switch (box.kind) {
      case BoxSpec::Kind::Anchored:
        v *= hi;
        break;
      case BoxSpec::Kind::Unanchored:
        v *= hi - box.lower[i];
        break;
      case BoxSpec::Kind::Periodic: {
        const Scalar& lo = box.lower[i];
        v *= (hi < lo) ? Scalar(1) - lo + hi : hi - lo;
        break;
      }
    }
  }
  return v;
}

void require_unit(const UnitPoint& p) {
  for (const auto& c : p.coords) {
    if (c < Scalar(0) || Scalar(1) < c) throw DomainError("box corner outside [0,1]");
  }
}

}  // namespace

std::string_view to_string(DiscrepancyKind kind) {
  switch (kind) {
    case DiscrepancyKind::StarL2:
      return "star-l2";
    case DiscrepancyKind::ExtremeL2:
      return "extreme-l2";
    case DiscrepancyKind::PeriodicL2:
      return "periodic-l2";
    case DiscrepancyKind::StarSup:
      return "star-sup";
  }
  return "unknown";
}

std::optional<DiscrepancyKind> parse_discrepancy_kind(std::string_view text) {
  for (auto k : {DiscrepancyKind::StarL2, DiscrepancyKind::ExtremeL2, DiscrepancyKind::PeriodicL2,
                 DiscrepancyKind::StarSup}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

BoxSpec BoxSpec::anchored(UnitPoint upper) {
  require_unit(upper);
  UnitPoint origin(std::vector<Scalar>(upper.dim(), Scalar(0)));
  return {Kind::Anchored, std::move(origin), std::move(upper)};
}

BoxSpec BoxSpec::unanchored(UnitPoint lower, UnitPoint upper) {
  if (lower.dim() != upper.dim()) throw DomainError("box corners differ in dimension");
  require_unit(lower);
  require_unit(upper);
  for (std::size_t i = 0; i < lower.dim(); ++i) {
    if (upper[i] < lower[i]) throw DomainError("unanchored box needs lower <= upper");
  }
  return {Kind::Unanchored, std::move(lower), std::move(upper)};
}

BoxSpec BoxSpec::periodic(UnitPoint lower, UnitPoint upper) {
  if (lower.dim() != upper.dim()) throw DomainError("box corners differ in dimension");
  require_unit(lower);
  require_unit(upper);
  return {Kind::Periodic, std::move(lower), std::move(upper)};
}

Scalar local_discrepancy(const BoxSpec& box, const PointList& pts) {
  if (box.dim() != pts.dim()) throw DomainError("box and point list differ in dimension");
  long long inside = 0;
  for (const auto& p : pts) inside += contains(box, p) ? 1 : 0;
  return Scalar(inside) - Scalar(static_cast<long long>(pts.size())) * volume(box);
}

Scalar l2_star_sq(const PointList& pts) { return evaluate_direct(DiscrepancyKind::StarL2, pts); }

Scalar l2_extreme_sq(const PointList& pts) { return evaluate_direct(DiscrepancyKind::ExtremeL2, pts); }

Scalar l2_periodic_sq(const PointList& pts) { return evaluate_direct(DiscrepancyKind::PeriodicL2, pts); }

Scalar l2_sq(DiscrepancyKind kind, const PointList& pts) { return evaluate_direct(kind, pts); }

Scalar l2_star_sq_sorted_1d(const PointList& pts) {
  if (pts.dim() != 1) throw DomainError("sorted star formula needs a one-dimensional list");
  require_nonempty(pts);
  const auto n = static_cast<long long>(pts.size());
  if (pts.is_exact()) {
    auto y = pts.rationals_1d();
    std::sort(y.begin(), y.end());
    Rational total;
    for (long long k = 1; k <= n; ++k) {
      const Rational diff = y[static_cast<std::size_t>(k - 1)] - make_rational(2 * k - 1, 2 * n);
      total += diff * diff;
    }
    return Scalar(Rational(n) * total + make_rational(1, 12));
  }
  auto y = pts.to_doubles();
  std::sort(y.begin(), y.end());
  Sum<double> total;
  for (long long k = 1; k <= n; ++k) {
    const double diff = y[static_cast<std::size_t>(k - 1)] -
                        static_cast<double>(2 * k - 1) / static_cast<double>(2 * n);
    total.add(diff * diff);
  }
  return Scalar(static_cast<double>(n) * total.value() + 1.0 / 12.0);
}

Scalar l2_star_sq_increment(const Scalar& prev_sq, const PointList& pts, const UnitPoint& y) {
  return evaluate_increment(DiscrepancyKind::StarL2, prev_sq, pts, y);
}

Scalar l2_extreme_sq_increment(const Scalar& prev_sq, const PointList& pts, const UnitPoint& y) {
  return evaluate_increment(DiscrepancyKind::ExtremeL2, prev_sq, pts, y);
}

Scalar l2_periodic_sq_increment(const Scalar& prev_sq, const PointList& pts, const UnitPoint& y) {
  return evaluate_increment(DiscrepancyKind::PeriodicL2, prev_sq, pts, y);
}

Scalar l2_sq_increment(DiscrepancyKind kind, const Scalar& prev_sq, const PointList& pts, const UnitPoint& y) {
  return evaluate_increment(kind, prev_sq, pts, y);
}

std::vector<Scalar> l2_sq_curve(DiscrepancyKind kind, const PointList& pts) {
  if (kind == DiscrepancyKind::StarSup) throw DomainError("star-sup has no L2 recursion");
  if (pts.is_exact()) return curve(kind, coords_of<Rational>(pts));
  return curve(kind, coords_of<double>(pts));
}

Scalar star_sup_1d(const PointList& pts) {
  if (pts.dim() != 1) throw DomainError("star-sup is only available in dimension 1");
  require_nonempty(pts);
  if (pts.is_exact()) {
    auto y = pts.rationals_1d();
    std::sort(y.begin(), y.end());
    return Scalar(star_sup_sorted(y));
  }
  auto y = pts.to_doubles();
  std::sort(y.begin(), y.end());
  return Scalar(star_sup_sorted(y));
}

std::vector<Scalar> star_sup_curve_1d(const PointList& pts) {
  if (pts.dim() != 1) throw DomainError("star-sup is only available in dimension 1");
  if (pts.is_exact()) return star_sup_curve(pts.rationals_1d());
  return star_sup_curve(pts.to_doubles());
}

}  // namespace l2g
