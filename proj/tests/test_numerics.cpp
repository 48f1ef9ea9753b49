#include <doctest.h>

#include <cmath>

#include "l2greedy/error.hpp"
#include "l2greedy/point.hpp"
#include "l2greedy/rational.hpp"
#include "l2greedy/scalar.hpp"
#include "test_util.hpp"

using namespace l2g;
using l2g::test::R;

TEST_CASE("rational canonical form") {
  CHECK(R(3, 6).to_string() == "1/2");
  CHECK(R(4, -8).to_string() == "-1/2");
  CHECK(R(6, 3).to_string() == "2");
  CHECK(R(0, 5).to_string() == "0");
  CHECK(R(2, 4) == R(1, 2));
  CHECK(R(1, 3) < R(1, 2));
  CHECK_THROWS_AS(R(1, 0), DomainError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/6") == R(1, 2));
  CHECK(Rational::parse("-5/10") == R(-1, 2));
  CHECK(Rational::parse("7") == R(7));
  CHECK(Rational::parse("0.3") == R(3, 10));
  CHECK(Rational::parse("-0.125") == R(-1, 8));
  CHECK(Rational::parse("1e-3") == R(1, 1000));
  CHECK(Rational::parse("2.5E1") == R(25));
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "0x10", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(R(1, 2) + R(1, 3) == R(5, 6));
  CHECK(R(1, 2) - R(1, 3) == R(1, 6));
  CHECK(R(2, 3) * R(3, 4) == R(1, 2));
  CHECK(R(1, 2) / R(1, 4) == R(2));
  CHECK(-R(1, 2) == R(-1, 2));
  CHECK_THROWS_AS(R(1, 2) / R(0), DomainError);
  CHECK(pow2(3) == R(8));
  CHECK(pow2(-3) == R(1, 8));
  CHECK(pow(R(2, 3), 3) == R(8, 27));
  CHECK(pow(R(2, 3), 0) == R(1));
  CHECK(abs(R(-3, 7)) == R(3, 7));
  CHECK(min(R(1, 3), R(1, 4)) == R(1, 4));
  CHECK(max(R(1, 3), R(1, 4)) == R(1, 3));
}

TEST_CASE("rational and double conversions") {
  CHECK(Rational::from_double(0.5) == R(1, 2));
  CHECK(Rational::from_double(0.1).to_string() == "3602879701896397/36028797018963968");
  CHECK(R(1, 3).to_double() == 1.0 / 3.0);
  CHECK(R(2, 3).to_double() == 2.0 / 3.0);
  CHECK(R(-1, 10).to_double() == -0.1);
  // 2^53 + 1 and 2^53 + 3 sit halfway between doubles: ties go to even.
  const long long two53 = 1LL << 53;
  CHECK(R(two53 + 1).to_double() == 9007199254740992.0);
  CHECK(R(two53 + 3).to_double() == 9007199254740996.0);
  CHECK(R(1, 1LL << 60).to_double() == std::ldexp(1.0, -60));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    CHECK(Rational::from_double(v).to_double() == v);
  }
}

TEST_CASE("scalar exactness propagation") {
  const Scalar a = R(1, 3);
  const Scalar b = R(1, 6);
  CHECK((a + b).is_exact());
  CHECK((a + b).exact() == R(1, 2));
  CHECK((a * b).exact() == R(1, 18));
  const Scalar c = 0.25;
  CHECK_FALSE((a + c).is_exact());
  CHECK((a + c).to_double() == doctest::Approx(1.0 / 3.0 + 0.25));
  CHECK_THROWS_AS(c.exact(), DomainError);
  CHECK(a.to_string() == "1/3");
  CHECK(c.to_string() == "0.25");
  CHECK(Scalar(0.1).to_string() == "0.10000000000000001");
  CHECK(Scalar(R(1, 2)) == Scalar(0.5));
  CHECK(Scalar(R(1, 3)) < Scalar(0.5));
}

TEST_CASE("point lists validate dimension and range") {
  PointList pts(2);
  pts.push_back(UnitPoint{Scalar(R(1, 2)), Scalar(R(1))});
  pts.push_back(UnitPoint{Scalar(0.25), Scalar(0.0)});
  CHECK(pts.size() == 2);
  CHECK_FALSE(pts.is_exact());
  CHECK_THROWS_AS(pts.push_back(UnitPoint{Scalar(R(1, 2))}), DomainError);
  CHECK_THROWS_AS(pts.push_back(UnitPoint{Scalar(R(3, 2)), Scalar(0)}), DomainError);
  CHECK_THROWS_AS(pts.push_back(UnitPoint{Scalar(-0.1), Scalar(0)}), DomainError);
  CHECK(pts.to_doubles() == std::vector<double>{0.5, 1.0, 0.25, 0.0});
  CHECK(pts.prefix(1).size() == 1);
  CHECK_THROWS_AS(pts.to_rationals(), DomainError);

  const auto one = PointList::from_rationals({R(1, 2), R(1, 4)});
  CHECK(one.is_exact());
  CHECK(one.rationals_1d() == std::vector<Rational>{R(1, 2), R(1, 4)});
  CHECK_THROWS_AS(PointList::from_doubles(2, {0.1, 0.2, 0.3}), DomainError);
}
