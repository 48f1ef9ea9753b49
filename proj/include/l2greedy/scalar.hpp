#pragma once

#include <string>
#include <variant>

#include "l2greedy/rational.hpp"

namespace l2g {

/// A value that is either exact (Rational) or a double.
///
/// Arithmetic between two exact values stays exact; anything that touches a
/// double produces a double.
class Scalar {
 public:
  Scalar() : value_(Rational()) {}
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(double value) : value_(value) {}               // NOLINT(google-explicit-constructor)
  Scalar(long long value) : value_(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(Rational(value)) {}        // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  /// Throws DomainError when the value is a double.
  const Rational& exact() const;
  double to_double() const;

  /// "p/q" in exact mode, 17 significant digits otherwise.
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  /// Mixed comparisons compare the double images.
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> value_;
};

/// "%.17g" rendering used for every decimal output.
std::string format_double(double value);

}  // namespace l2g
