#include "l2greedy/greedy.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "l2greedy/error.hpp"

namespace l2g {

namespace {

void require_l2(DiscrepancyKind kind) {
  if (kind == DiscrepancyKind::StarSup) throw DomainError("greedy constructions need an L2 discrepancy kind");
}

void require_half_open(const Rational& x) {
  if (x.sign() < 0 || !(x < Rational(1))) throw DomainError("objective argument " + x.to_string() + " outside [0,1)");
}

void require_half_open(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("objective argument outside [0,1)");
}

std::vector<Rational> exact_coords_1d(const PointList& pts) {
  if (pts.dim() != 1) throw DomainError("one-dimensional start set expected");
  std::vector<Rational> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    out.push_back(p[0].is_exact() ? p[0].exact() : Rational::from_double(p[0].to_double()));
  }
  return out;
}

// f_N restricted to the gap that holds the points <= x: -(2c+1)x + (N+1)x^2 - 2 S_{c+1}.
Rational star_value(const GreedyState& s, std::size_t below, const Rational& x) {
  const Rational n1(static_cast<long long>(s.size() + 1));
  return n1 * x * x - Rational(static_cast<long long>(2 * below + 1)) * x - Rational(2) * s.suffix_sum(below + 1);
}

// Linear coefficient 2T + 2c - N shared by g_N and h_N on a gap with c points below.
Rational periodic_slope(const GreedyState& s, std::size_t below) {
  return Rational(2) * s.sum() + Rational(static_cast<long long>(2 * below) - static_cast<long long>(s.size()));
}

Rational periodic_value(const GreedyState& s, std::size_t below, const Rational& x, PeriodicObjective which) {
  const Rational n(static_cast<long long>(s.size()));
  const Rational prefix = s.sum() - s.suffix_sum(below + 1);
  const Rational quadratic = n * x * x - periodic_slope(s, below) * x + Rational(2) * prefix;
  if (which == PeriodicObjective::G) return quadratic;
  return quadratic + s.sum_sq() - s.sum();
}

struct Candidate {
  Rational x;
  Rational value;
};

// Clamped vertex of each gap, ascending in x.
template <class Visit>
void for_each_periodic_candidate(const GreedyState& s, PeriodicObjective which, Visit visit) {
  const std::size_t n = s.size();
  if (n == 0) throw DomainError("periodic greedy step needs at least one point");
  const Rational two_n(static_cast<long long>(2 * n));
  const auto& y = s.sorted();
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const Rational lo = k == 1 ? Rational(0) : y[k - 2];
    const Rational hi = k == n + 1 ? Rational(1) : y[k - 1];
    Rational x = periodic_slope(s, k - 1) / two_n;
    if (x < lo) x = lo;
    if (hi < x) x = hi;
    if (!(x < Rational(1))) continue;
    Rational v = periodic_value(s, k - 1, x, which);
    visit(Candidate{std::move(x), std::move(v)});
  }
}

// Gamma_{N+1} ascending, with f_N at each point.
template <class Visit>
void for_each_star_candidate(const GreedyState& s, Visit visit) {
  const std::size_t n1 = s.size() + 1;
  const auto& y = s.sorted();
  std::size_t below = 0;
  for (std::size_t l = 1; l <= n1; ++l) {
    Rational gamma = make_rational(static_cast<long long>(2 * l - 1), static_cast<long long>(2 * n1));
    while (below < y.size() && !(gamma < y[below])) ++below;
    Rational v = star_value(s, below, gamma);
    visit(Candidate{std::move(gamma), std::move(v)});
  }
}

std::vector<Rational> collect_minimizers(std::vector<Candidate> all) {
  if (all.empty()) return {};
  const auto best = std::min_element(all.begin(), all.end(),
                                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  const Rational min_value = best->value;
  std::vector<Rational> out;
  for (auto& c : all) {
    if (c.value == min_value && (out.empty() || out.back() != c.x)) out.push_back(std::move(c.x));
  }
  return out;
}

}  // namespace

GreedyState::GreedyState(DiscrepancyKind kind, const std::vector<Rational>& start) : kind_(kind) {
  require_l2(kind);
  suffix_.emplace_back(0);
  for (const auto& x : start) push(x);
}

std::size_t GreedyState::count_le(const Rational& x) const {
  return static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin());
}

void GreedyState::push(const Rational& x) {
  if (x.sign() < 0 || Rational(1) < x) throw DomainError("point " + x.to_string() + " outside [0,1]");
  const std::size_t n = size();
  const std::size_t below = count_le(x);
  const Rational two_n_plus_one(static_cast<long long>(2 * n + 1));
  switch (kind_) {
    case DiscrepancyKind::StarL2:
      current_sq_ += sum_sq_ + star_value(*this, below, x) + two_n_plus_one / Rational(3);
      break;
    case DiscrepancyKind::ExtremeL2:
      current_sq_ += two_n_plus_one / Rational(12) - (sum_ - sum_sq_) +
                     periodic_value(*this, below, x, PeriodicObjective::G);
      break;
    case DiscrepancyKind::PeriodicL2:
      current_sq_ += two_n_plus_one / Rational(6) + Rational(2) * periodic_value(*this, below, x, PeriodicObjective::H);
      break;
    case DiscrepancyKind::StarSup:
      break;
  }

  points_.push_back(x);
  sorted_.insert(sorted_.begin() + static_cast<std::ptrdiff_t>(below), x);
  // New S'_k = S_k + x for k <= below+1 and S'_k = S_{k-1} afterwards.
  Rational carried = suffix_[below];
  suffix_.insert(suffix_.begin() + static_cast<std::ptrdiff_t>(below) + 1, std::move(carried));
  for (std::size_t i = 0; i <= below; ++i) suffix_[i] += x;
  sum_ += x;
  sum_sq_ += x * x;
}

Scalar eval_star_objective(const GreedyState& state, const Scalar& x) {
  if (x.is_exact()) {
    require_half_open(x.exact());
    return Scalar(star_value(state, state.count_le(x.exact()), x.exact()));
  }
  const double v = x.to_double();
  require_half_open(v);
  double total = 0.0;
  for (const auto& p : state.points()) total += std::max(p.to_double(), v);
  return Scalar(-2.0 * total + static_cast<double>(state.size() + 1) * v * v - v);
}

Rational next_star_1d(const GreedyState& state) {
  if (state.kind() != DiscrepancyKind::StarL2) throw DomainError("next_star_1d needs a star-l2 state");
  std::optional<Candidate> best;
  for_each_star_candidate(state, [&](Candidate c) {
    if (!best || c.value < best->value) best = std::move(c);
  });
  return best->x;
}

std::vector<Rational> star_argmin_set(const GreedyState& state) {
  std::vector<Candidate> all;
  for_each_star_candidate(state, [&](Candidate c) { all.push_back(std::move(c)); });
  return collect_minimizers(std::move(all));
}

PointList greedy_star_1d(const PointList& start, std::size_t n) {
  auto seed = exact_coords_1d(start);
  if (seed.empty()) seed.push_back(make_rational(1, 2));
  return run_greedy_1d(DiscrepancyKind::StarL2, seed, n).to_point_list();
}

Scalar eval_periodic_objective(const GreedyState& state, const Scalar& x, PeriodicObjective which) {
  if (x.is_exact()) {
    require_half_open(x.exact());
    return Scalar(periodic_value(state, state.count_le(x.exact()), x.exact(), which));
  }
  const double v = x.to_double();
  require_half_open(v);
  double total = 0.0;
  for (const auto& p : state.points()) {
    const double xn = p.to_double();
    if (which == PeriodicObjective::H) {
      total += (xn - v) * (xn - v) - std::abs(xn - v);
    } else {
      total += 2.0 * (std::min(xn, v) - xn * v);
    }
  }
  if (which == PeriodicObjective::G) total -= static_cast<double>(state.size()) * v * (1.0 - v);
  return Scalar(total);
}

Rational next_periodic_1d(const GreedyState& state) {
  if (state.kind() == DiscrepancyKind::StarL2) throw DomainError("next_periodic_1d needs an extreme or periodic state");
  std::optional<Candidate> best;
  for_each_periodic_candidate(state, PeriodicObjective::H, [&](Candidate c) {
    if (!best || c.value < best->value) best = std::move(c);
  });
  return best->x;
}

std::vector<Rational> periodic_argmin_set(const GreedyState& state, PeriodicObjective which) {
  std::vector<Candidate> all;
  for_each_periodic_candidate(state, which, [&](Candidate c) { all.push_back(std::move(c)); });
  return collect_minimizers(std::move(all));
}

PointList greedy_periodic_1d(const PointList& start, std::size_t n) {
  auto seed = exact_coords_1d(start);
  if (seed.empty()) seed.emplace_back(0);
  return run_greedy_1d(DiscrepancyKind::PeriodicL2, seed, n).to_point_list();
}

GreedyState run_greedy_1d(DiscrepancyKind kind, const std::vector<Rational>& start, std::size_t n) {
  if (n < start.size()) {
    throw DomainError("target length " + std::to_string(n) + " is shorter than the start set");
  }
  GreedyState state(kind, start);
  while (state.size() < n) {
    state.push(kind == DiscrepancyKind::StarL2 ? next_star_1d(state) : next_periodic_1d(state));
  }
  return state;
}

}  // namespace l2g
