#pragma once

// Typed building blocks shared by the discrepancy evaluators and the greedy
// searches. T is either Rational or double.

#include <cmath>
#include <cstddef>

#include "l2greedy/rational.hpp"

namespace l2g::detail {

template <class T>
class Sum {
 public:
  void add(const T& v) { s_ += v; }
  void add_product(const T& a, const T& b) { s_ += a * b; }
  /// Adds p/q.
  void add_ratio(const T& p, const T& q) { s_ += p / q; }
  T value() const { return s_; }

 private:
  T s_{};
};

// Neumaier compensated summation.
template <>
class Sum<double> {
 public:
  void add(double v) {
    const double t = s_ + v;
    if (std::fabs(s_) >= std::fabs(v)) {
      c_ += (s_ - t) + v;
    } else {
      c_ += (v - t) + s_;
    }
    s_ = t;
  }
  // a*b and p/q enter with their rounding errors, recovered by fma.
  void add_product(double a, double b) {
    const double p = a * b;
    add(p);
    add(std::fma(a, b, -p));
  }
  void add_ratio(double p, double q) {
    const double h = p / q;
    add(h);
    add(-std::fma(h, q, -p) / q);
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

template <class T>
T ratio(long long p, long long q);

template <>
inline Rational ratio<Rational>(long long p, long long q) {
  return make_rational(p, q);
}

template <>
inline double ratio<double>(long long p, long long q) {
  return static_cast<double>(p) / static_cast<double>(q);
}

/// 1 / base^d
template <class T>
T inverse_power(long long base, std::size_t d) {
  T b = ratio<T>(1, base);
  T out = ratio<T>(1, 1);
  for (std::size_t i = 0; i < d; ++i) out *= b;
  return out;
}

inline double tmax(double a, double b) { return a < b ? b : a; }
inline double tmin(double a, double b) { return b < a ? b : a; }
inline double tabs(double a) { return std::fabs(a); }
inline const Rational& tmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& tmin(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational tabs(const Rational& a) { return abs(a); }

// Per-coordinate factors of the three closed forms.

/// 1 - x^2
template <class T>
T star_single(const T& x) {
  return T(1) - x * x;
}
/// 1 - max(a, b)
template <class T>
T star_pair(const T& a, const T& b) {
  return T(1) - tmax(a, b);
}
/// x (1 - x)
template <class T>
T extreme_single(const T& x) {
  return x * (T(1) - x);
}
/// min(a, b) - a b
template <class T>
T extreme_pair(const T& a, const T& b) {
  return tmin(a, b) - a * b;
}
/// 1/2 - |a - b| + (a - b)^2
template <class T>
T periodic_pair(const T& a, const T& b) {
  const T diff = a - b;
  return ratio<T>(1, 2) - tabs(diff) + diff * diff;
}

}  // namespace l2g::detail
