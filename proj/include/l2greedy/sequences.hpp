#pragma once

#include <cstdint>

#include "l2greedy/point.hpp"
#include "l2greedy/rational.hpp"

namespace l2g {

/// Base-2 radical inverse: the binary digits of n mirrored about the point.
Rational radical_inverse(std::uint64_t n);

/// (phi(0), ..., phi(N-1)).
PointList van_der_corput_prefix(std::size_t n);

/// First N terms of (phi(0), 1-phi(0), phi(1), 1-phi(1), ...). Contains the value 1 once.
PointList symmetrized_vdc_prefix(std::size_t n);

/// ((2k-1)/(2N) : k = 1..N).
PointList centered_grid(std::size_t n);

}  // namespace l2g
