#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "l2greedy/discrepancy.hpp"
#include "l2greedy/error.hpp"
#include "l2greedy/sequences.hpp"
#include "test_util.hpp"

using namespace l2g;
using namespace l2g::test;

namespace {

// Reference values integrated exactly from the definitions (tests/oracles/compute_oracles.py).
struct Reference {
  PointList pts;
  Rational star, extreme, periodic, sup;
};

std::vector<Reference> references() {
  return {
      {list_1d({"0", "1/2", "1/4"}), R(11, 16), R(1, 8), R(1, 4), R(3, 2)},
      {list_1d({"1/8", "3/8", "5/8", "7/8"}), R(1, 12), R(1, 12), R(1, 6), R(1, 2)},
      {list_1d({"1/3", "4/5", "1/10", "1"}), R(5, 18), R(67, 300), R(67, 150), R(6, 5)},
      {list_1d({"1/7"}), R(31, 147), R(1, 12), R(1, 6), R(6, 7)},
  };
}

PointList shuffled(const PointList& pts, std::mt19937_64& rng) {
  std::vector<UnitPoint> v(pts.begin(), pts.end());
  std::shuffle(v.begin(), v.end(), rng);
  PointList out(pts.dim());
  for (auto& p : v) out.push_back(std::move(p));
  return out;
}

}  // namespace

TEST_CASE("kind names") {
  for (auto k : {DiscrepancyKind::StarL2, DiscrepancyKind::ExtremeL2, DiscrepancyKind::PeriodicL2,
                 DiscrepancyKind::StarSup}) {
    CHECK(parse_discrepancy_kind(to_string(k)) == k);
  }
  CHECK(to_string(DiscrepancyKind::StarL2) == "star-l2");
  CHECK_FALSE(parse_discrepancy_kind("star").has_value());
}

TEST_CASE("closed forms match integrated references") {
  for (const auto& ref : references()) {
    CAPTURE(ref.pts.size());
    CHECK(l2_star_sq(ref.pts).exact() == ref.star);
    CHECK(l2_extreme_sq(ref.pts).exact() == ref.extreme);
    CHECK(l2_periodic_sq(ref.pts).exact() == ref.periodic);
    CHECK(l2_star_sq_sorted_1d(ref.pts).exact() == ref.star);
    CHECK(star_sup_1d(ref.pts).exact() == ref.sup);
    const auto floats = PointList::from_doubles_1d([&] {
      std::vector<double> v;
      for (const auto& p : ref.pts) v.push_back(p[0].to_double());
      return v;
    }());
    CHECK(rel_err(l2_star_sq(floats).to_double(), ref.star.to_double()) <= 1e-12);
    CHECK(rel_err(l2_extreme_sq(floats).to_double(), ref.extreme.to_double()) <= 1e-12);
    CHECK(rel_err(l2_periodic_sq(floats).to_double(), ref.periodic.to_double()) <= 1e-12);
  }
  PointList two_d(2);
  two_d.push_back(UnitPoint{Scalar(R(1, 2)), Scalar(R(1, 3))});
  two_d.push_back(UnitPoint{Scalar(R(1, 4)), Scalar(R(3, 4))});
  two_d.push_back(UnitPoint{Scalar(R(0)), Scalar(R(9, 10))});
  CHECK(l2_star_sq(two_d).exact() == R(8471, 38400));
}

TEST_CASE("single points and grids") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto one = PointList::from_rationals({random_unit(rng)});
    CHECK(l2_periodic_sq(one).exact() == R(1, 6));
    CHECK(l2_extreme_sq(one).exact() == R(1, 12));
  }
  for (std::size_t n : {1, 2, 5, 8, 33}) {
    CHECK(l2_star_sq(centered_grid(n)).exact() == R(1, 12));
    CHECK(star_sup_1d(centered_grid(n)).exact() == R(1, 2));
  }
  CHECK(std::sqrt(l2_star_sq(centered_grid(8)).to_double()) == doctest::Approx(0.2886751345948129).epsilon(1e-15));
  CHECK(star_sup_1d(list_1d({"0"})).exact() == R(1));
  CHECK(star_sup_1d(list_1d({"1/2", "1/2"})).exact() == R(1));
}

TEST_CASE("star L2 lower bound is attained only by the centered grid") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto pts = random_exact(rng, 1 + i % 9, 1, 64);
    const bool is_grid = [&] {
      auto v = pts.rationals_1d();
      std::sort(v.begin(), v.end());
      return v == centered_grid(v.size()).rationals_1d();
    }();
    const Rational sq = l2_star_sq(pts).exact();
    CHECK_FALSE(sq < R(1, 12));
    CHECK((sq == R(1, 12)) == is_grid);
  }
}

TEST_CASE("empty or mismatched input is rejected") {
  CHECK_THROWS_AS(l2_star_sq(PointList(1)), DomainError);
  CHECK_THROWS_AS(star_sup_1d(PointList(1)), DomainError);
  CHECK_THROWS_AS(star_sup_1d(PointList::from_doubles(2, {0.1, 0.2})), DomainError);
  CHECK_THROWS_AS(l2_star_sq_sorted_1d(PointList::from_doubles(2, {0.1, 0.2})), DomainError);
  CHECK_THROWS_AS(l2_sq(DiscrepancyKind::StarSup, list_1d({"1/2"})), DomainError);
}

TEST_CASE("permutation invariance") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const std::size_t dim = 1 + i % 3;
    const auto pts = random_exact(rng, 12, dim, 50);
    const auto other = shuffled(pts, rng);
    for (auto k : {DiscrepancyKind::StarL2, DiscrepancyKind::ExtremeL2, DiscrepancyKind::PeriodicL2}) {
      CHECK(l2_sq(k, pts).exact() == l2_sq(k, other).exact());
    }
  }
}

TEST_CASE("one-dimensional identities") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto pts = random_exact(rng, 1 + i * 3, 1);
    CHECK(l2_star_sq(pts).exact() == l2_star_sq_sorted_1d(pts).exact());
    CHECK(l2_periodic_sq(pts).exact() == R(2) * l2_extreme_sq(pts).exact());
    const auto floats = random_float(rng, 1 + i * 25, 1);
    CHECK(rel_err(l2_star_sq(floats).to_double(), l2_star_sq_sorted_1d(floats).to_double()) <= 1e-12);
    CHECK(rel_err(l2_periodic_sq(floats).to_double(), 2 * l2_extreme_sq(floats).to_double()) <= 1e-12);
  }
}

TEST_CASE("incremental recursions agree with the closed forms") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const std::size_t dim = 1 + i % 3;
    const std::size_t n = 1 + i * 2;
    const auto pts = random_exact(rng, n, dim, 40);
    const auto flt = random_float(rng, n, dim);
    for (auto k : {DiscrepancyKind::StarL2, DiscrepancyKind::ExtremeL2, DiscrepancyKind::PeriodicL2}) {
      const auto curve = l2_sq_curve(k, pts);
      REQUIRE(curve.size() == n);
      for (std::size_t m = 1; m <= n; m += 3) CHECK(curve[m - 1].exact() == l2_sq(k, pts.prefix(m)).exact());
      const auto fcurve = l2_sq_curve(k, flt);
      CHECK(rel_err(fcurve.back().to_double(), l2_sq(k, flt).to_double()) <= 1e-10);
      const Scalar step = l2_sq_increment(k, l2_sq(k, pts), pts, pts[0]);
      PointList extended = pts;
      extended.push_back(pts[0]);
      CHECK(step.exact() == l2_sq(k, extended).exact());
    }
  }
  CHECK(l2_star_sq_increment(Scalar(0), PointList(1), UnitPoint{Scalar(R(1, 2))}).exact() == R(1, 12));
}

TEST_CASE("star sup curve matches per-prefix evaluation") {
  std::mt19937_64 rng(29);
  const auto pts = random_exact(rng, 60, 1, 20);  // small denominators force duplicates
  const auto curve = star_sup_curve_1d(pts);
  for (std::size_t m = 1; m <= pts.size(); ++m) CHECK(curve[m - 1].exact() == star_sup_1d(pts.prefix(m)).exact());
  // Brute force over the breakpoints of the vdC prefix (0, 1/2, 1/4).
  const auto v = van_der_corput_prefix(3);
  Rational best;
  for (const char* t : {"0", "1/4", "1/2", "1"}) {
    const Rational s = Rational::parse(t);
    for (const Rational& probe : {s, s + R(1, 1000000)}) {
      if (R(1) < probe) continue;
      const auto d = local_discrepancy(BoxSpec::anchored(UnitPoint{Scalar(probe)}), v).exact();
      best = max(best, abs(d));
    }
  }
  CHECK(star_sup_1d(v).exact() == R(3, 2));
  CHECK(abs(best - R(3, 2)) < R(1, 100000));
}

TEST_CASE("local discrepancy") {
  const auto v = van_der_corput_prefix(3);
  CHECK(local_discrepancy(BoxSpec::anchored(UnitPoint{Scalar(R(1, 2))}), v).exact() == R(1, 2));
  CHECK(local_discrepancy(BoxSpec::unanchored(UnitPoint{Scalar(R(1, 4))}, UnitPoint{Scalar(R(3, 4))}), v).exact() ==
        R(1, 2));
  // Wrap-around [3/4, 1) u [0, 1/8) holds 0 only.
  CHECK(local_discrepancy(BoxSpec::periodic(UnitPoint{Scalar(R(3, 4))}, UnitPoint{Scalar(R(1, 8))}), v).exact() ==
        R(1) - R(3) * R(3, 8));
  CHECK_THROWS_AS(BoxSpec::unanchored(UnitPoint{Scalar(R(3, 4))}, UnitPoint{Scalar(R(1, 4))}), DomainError);
}

TEST_CASE("closed form agrees with numerical integration of the definition") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 6; ++i) {
    const std::size_t dim = 1 + i % 2;
    const auto pts = random_float(rng, 2 + i, dim);
    const int m = dim == 1 ? 20000 : 400;
    double total = 0.0;
    std::vector<double> t(dim);
    const long cells = dim == 1 ? m : static_cast<long>(m) * m;
    for (long c = 0; c < cells; ++c) {
      t[0] = (static_cast<double>(c % m) + 0.5) / m;
      if (dim == 2) t[1] = (static_cast<double>(c / m) + 0.5) / m;
      std::vector<Scalar> up(t.begin(), t.end());
      const double d = local_discrepancy(BoxSpec::anchored(UnitPoint(up)), pts).to_double();
      total += d * d;
    }
    total /= static_cast<double>(cells);
    CHECK(std::abs(total - l2_star_sq(pts).to_double()) <= 1e-3);
  }
}
