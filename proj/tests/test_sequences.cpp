#include <doctest.h>

#include "l2greedy/error.hpp"
#include "l2greedy/sequences.hpp"
#include "test_util.hpp"

using namespace l2g;
using l2g::test::R;
using l2g::test::rats;

TEST_CASE("radical inverse") {
  const auto expected = rats({"0", "1/2", "1/4", "3/4", "1/8", "5/8", "3/8", "7/8", "1/16"});
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(radical_inverse(n) == expected[n]);
  CHECK(radical_inverse(1023) == R(1023, 1024));
  CHECK(radical_inverse(std::uint64_t{1} << 40) == pow2(-41));
}

TEST_CASE("van der Corput prefixes") {
  CHECK(van_der_corput_prefix(3).rationals_1d() == rats({"0", "1/2", "1/4"}));
  // First 2^r terms form {k/2^r}.
  auto v = van_der_corput_prefix(64).rationals_1d();
  std::sort(v.begin(), v.end());
  for (std::size_t k = 0; k < 64; ++k) CHECK(v[k] == R(static_cast<long long>(k), 64));
  CHECK_THROWS_AS(van_der_corput_prefix(0), DomainError);
}

TEST_CASE("symmetrized van der Corput") {
  CHECK(symmetrized_vdc_prefix(7).rationals_1d() == rats({"0", "1", "1/2", "1/2", "1/4", "3/4", "3/4"}));
  CHECK(symmetrized_vdc_prefix(1).rationals_1d() == rats({"0"}));
}

TEST_CASE("centered grid") {
  CHECK(centered_grid(4).rationals_1d() == rats({"1/8", "3/8", "5/8", "7/8"}));
  CHECK(centered_grid(1).rationals_1d() == rats({"1/2"}));
  CHECK_THROWS_AS(centered_grid(0), DomainError);
}
