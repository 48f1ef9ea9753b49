#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace l2g {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. Values are
/// immutable from the outside; every arithmetic operator returns a new,
/// canonical value.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor): integers are exact
  explicit Rational(const mpz_class& value);

  /// Exact binary value of a finite double.
  static Rational from_double(double value);

  /// Parses "p/q", an integer, or a plain decimal such as "-0.125" (exactly).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Nearest double (round half to even).
  double to_double() const;

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class canonical) : value_(std::move(canonical)) {}
  friend Rational make_rational(const mpz_class& p, const mpz_class& q);

  mpq_class value_;
};

/// Reduced p/q with positive denominator. Throws DomainError when q == 0.
Rational make_rational(long long p, long long q);
Rational make_rational(const mpz_class& p, const mpz_class& q);

std::strong_ordering rat_cmp(const Rational& a, const Rational& b);
double rat_to_float(const Rational& a);

Rational abs(const Rational& a);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// 2^exponent for exponent >= 0, 2^-|exponent| otherwise.
Rational pow2(int exponent);
/// base^exponent, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace l2g
