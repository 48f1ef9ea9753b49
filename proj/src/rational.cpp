#include "l2greedy/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "l2greedy/error.hpp"

namespace l2g {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

// sign? digits [. digits] [e sign? digits]
Rational parse_decimal(std::string_view s, std::string_view whole) {
  const auto fail = [&] { return ParseError("malformed number: '" + std::string(whole) + "'"); };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) throw fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw fail();
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
      throw fail();
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw fail();
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(mpz_class(mantissa * scale));
  return make_rational(mantissa, scale);
}

}  // namespace

Rational::Rational(long long value) : value_(mpz_class(static_cast<signed long>(value))) {
  static_assert(sizeof(long) >= sizeof(long long), "LP64 expected");
}

Rational::Rational(const mpz_class& value) : value_(value) {}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert non-finite double to Rational");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class p = parse_integer(text.substr(0, slash), text);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    if (den.find_first_not_of('0') == std::string_view::npos) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(p, mpz_class(std::string(den), 10));
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, text);
  return Rational(parse_integer(text, text));
}

double Rational::to_double() const {
  const int s = sgn(value_);
  if (s == 0) return 0.0;
  mpz_class num = abs(value_.get_num());
  const mpz_class& den = value_.get_den();
  // Scale so that the integer quotient carries exactly 54 bits: 53 mantissa
  // bits plus one guard bit. The remainder acts as the sticky bit.
  long shift = 54 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  mpz_class q, r;
  for (;;) {
    mpz_class n = num, d = den;
    if (shift >= 0) {
      mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
      mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const auto bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    if (bits == 54) break;
    shift += bits > 54 ? -1 : 1;
  }
  const bool guard = mpz_odd_p(q.get_mpz_t()) != 0;
  const bool sticky = sgn(r) != 0;
  mpz_class mantissa = q >> 1;
  if (guard && (sticky || mpz_odd_p(mantissa.get_mpz_t()))) mantissa += 1;
  const double m = mantissa.get_d();  // <= 2^53, exact
  const double v = std::ldexp(m, static_cast<int>(1 - shift));
  return s < 0 ? -v : v;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (sgn(rhs.value_) == 0) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational make_rational(long long p, long long q) {
  return make_rational(mpz_class(static_cast<signed long>(p)), mpz_class(static_cast<signed long>(q)));
}

Rational make_rational(const mpz_class& p, const mpz_class& q) {
  if (sgn(q) == 0) throw DomainError("zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Rational(std::move(v));
}

std::strong_ordering rat_cmp(const Rational& a, const Rational& b) { return a <=> b; }

double rat_to_float(const Rational& a) { return a.to_double(); }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow2(int exponent) {
  mpz_class p = 1;
  const unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exponent >= 0 ? Rational(p) : make_rational(mpz_class(1), p);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace l2g
