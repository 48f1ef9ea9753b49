#include "l2greedy/scalar.hpp"

#include <cstdio>
#include <functional>

#include "l2greedy/error.hpp"

namespace l2g {

namespace {

template <class ExactOp, class FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, FloatOp float_op) {
  if (a.is_exact() && b.is_exact()) return Scalar(exact_op(a.exact(), b.exact()));
  return Scalar(float_op(a.to_double(), b.to_double()));
}

}  // namespace

const Rational& Scalar::exact() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw DomainError("scalar is not exact");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_double();
  return std::get<double>(value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
  return format_double(std::get<double>(value_));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Scalar(-*r);
  return Scalar(-std::get<double>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::plus<>{}, std::plus<>{});
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::minus<>{}, std::minus<>{});
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, std::multiplies<>{}, std::multiplies<>{});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_exact() && b.exact().sign() == 0) throw DomainError("division by zero");
  return combine(a, b, std::divides<>{}, std::divides<>{});
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.to_double() < b.to_double();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace l2g
