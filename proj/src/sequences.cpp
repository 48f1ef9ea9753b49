#include "l2greedy/sequences.hpp"

#include "l2greedy/error.hpp"

namespace l2g {

Rational radical_inverse(std::uint64_t n) {
  mpz_class numerator = 0;
  unsigned digits = 0;
  for (; n != 0; n >>= 1, ++digits) {
    numerator <<= 1;
    numerator += static_cast<unsigned long>(n & 1U);
  }
  mpz_class denominator = 1;
  denominator <<= digits;
  return make_rational(numerator, denominator);
}

PointList van_der_corput_prefix(std::size_t n) {
  if (n == 0) throw DomainError("sequence length must be positive");
  PointList out(1);
  for (std::size_t i = 0; i < n; ++i) out.push_back(UnitPoint{Scalar(radical_inverse(i))});
  return out;
}

PointList symmetrized_vdc_prefix(std::size_t n) {
  if (n == 0) throw DomainError("sequence length must be positive");
  PointList out(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational phi = radical_inverse(i / 2);
    out.push_back(UnitPoint{Scalar(i % 2 == 0 ? phi : Rational(1) - phi)});
  }
  return out;
}

PointList centered_grid(std::size_t n) {
  if (n == 0) throw DomainError("grid size must be positive");
  PointList out(1);
  const auto two_n = static_cast<long long>(2 * n);
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(UnitPoint{Scalar(make_rational(static_cast<long long>(2 * k - 1), two_n))});
  }
  return out;
}

}  // namespace l2g
