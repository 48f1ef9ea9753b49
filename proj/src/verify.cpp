#include "l2greedy/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "l2greedy/error.hpp"
#include "l2greedy/sequences.hpp"

namespace l2g {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string join(const std::vector<Rational>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].to_string();
  }
  return out + "}";
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// N = 2^r m with m odd.
std::pair<unsigned, std::uint64_t> split_two_adic(std::uint64_t n) {
  const auto r = static_cast<unsigned>(std::countr_zero(n));
  return {r, n >> r};
}

bool in_centered_grid(const Rational& x, std::size_t m) {
  // x == (2l-1)/(2M) for some l in 1..M  <=>  2M x is an odd integer in [1, 2M-1].
  const Rational scaled = x * Rational(static_cast<long long>(2 * m));
  if (!scaled.is_integer()) return false;
  const mpz_class v = scaled.numerator();
  return mpz_odd_p(v.get_mpz_t()) != 0 && v >= 1 && v <= static_cast<long>(2 * m - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// VerificationReport

void VerificationReport::add(Parameters parameters, bool passed, std::string witness) {
  if (!passed && witness.empty()) throw std::logic_error("failing case in suite " + suite_ + " without witness");
  cases_.push_back(CaseResult{std::move(parameters), passed, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.cases()) {
    CaseResult copy = c;
    if (other.suite() != suite_) copy.parameters.insert(copy.parameters.begin(), {"suite", other.suite()});
    cases_.push_back(std::move(copy));
  }
}

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(cases_.begin(), cases_.end(), [](const CaseResult& c) { return c.passed; }));
}

std::string VerificationReport::to_text(bool verbose) const {
  std::ostringstream out;
  out << suite_ << ": " << (ok() ? "PASS" : "FAIL") << " (" << passed_count() << "/" << cases_.size()
      << " cases passed)\n";
  for (std::size_t i = 0; i < cases_.size(); ++i) {
    const auto& c = cases_[i];
    if (c.passed && !verbose) continue;
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] case " << i;
    for (const auto& [k, v] : c.parameters) out << ' ' << k << '=' << v;
    if (!c.witness.empty()) out << " witness: " << c.witness;
    out << '\n';
  }
  return out.str();
}

std::string VerificationReport::to_jsonl() const {
  std::string out;
  for (std::size_t i = 0; i < cases_.size(); ++i) {
    const auto& c = cases_[i];
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.parameters) params[k] = v;
    nlohmann::ordered_json rec;
    rec["suite"] = suite_;
    rec["case"] = i;
    rec["parameters"] = std::move(params);
    rec["status"] = c.passed ? "pass" : "fail";
    rec["witness"] = c.witness;
    out += rec.dump();
    out += '\n';
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng, std::uint64_t max_den) {
  if (max_den == 0) throw DomainError("max_den must be positive");
  const std::uint64_t den = std::uniform_int_distribution<std::uint64_t>(1, max_den)(rng);
  const std::uint64_t num = std::uniform_int_distribution<std::uint64_t>(0, den - 1)(rng);
  return make_rational(static_cast<long long>(num), static_cast<long long>(den));
}

// ---------------------------------------------------------------------------
// G_N

Rational eval_G(std::uint64_t n, const Rational& x) {
  if (x.sign() < 0 || !(x < Rational(1))) throw DomainError("G_N argument outside [0,1)");
  const Rational count(static_cast<long long>(n));
  Rational total = -count * x * (Rational(1) - x);
  Rational sum;
  for (std::uint64_t k = 0; k < n; ++k) {
    const Rational phi = radical_inverse(k);
    sum += min(phi, x) - phi * x;
  }
  return total + Rational(2) * sum;
}

std::vector<Rational> argmin_G(std::uint64_t n) {
  if (n == 0) throw DomainError("argmin_G needs N >= 1");
  std::vector<Rational> y;
  y.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) y.push_back(radical_inverse(k));
  std::sort(y.begin(), y.end());
  Rational total;
  for (const auto& v : y) total += v;

  // On [y_{c}, y_{c+1}] (c points at or below x):
  // G_N(x) = N x^2 + (N - 2c - 2T) x + 2 P_c with P_c = y_1 + ... + y_c.
  const Rational count(static_cast<long long>(n));
  Rational prefix;
  Rational best_value;
  std::vector<Rational> best;
  for (std::uint64_t c = 0; c <= n; ++c) {
    if (c > 0) prefix += y[c - 1];
    const Rational lo = c == 0 ? Rational(0) : y[c - 1];
    const Rational hi = c == n ? Rational(1) : y[c];
    const Rational linear = count - Rational(static_cast<long long>(2 * c)) - Rational(2) * total;
    Rational x = -linear / (Rational(2) * count);
    if (x < lo) x = lo;
    if (hi < x) x = hi;
    if (!(x < Rational(1))) continue;
    const Rational value = count * x * x + linear * x + Rational(2) * prefix;
    if (best.empty() || value < best_value) {
      best_value = value;
      best.assign(1, x);
    } else if (value == best_value && best.back() != x) {
      best.push_back(x);
    }
  }
  return best;
}

VerificationReport check_G_periodicity(std::uint64_t n, std::size_t samples, std::uint64_t seed) {
  VerificationReport report("G-periodicity");
  const auto [r, m] = split_two_adic(n);
  if (r == 0) {
    report.add({{"N", str(n)}, {"r", "0"}}, true);
    return report;
  }
  std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
  const Rational period = pow2(-static_cast<int>(r));
  for (std::size_t s = 0; s < samples; ++s) {
    const Rational x = random_rational(rng) * period;
    const Rational base = eval_G(n, x);
    std::string witness;
    for (std::uint64_t l = 1; l < (1ULL << r) && witness.empty(); ++l) {
      const Rational shifted = x + Rational(static_cast<long long>(l)) * period;
      const Rational v = eval_G(n, shifted);
      if (v != base) {
        witness = "x=" + x.to_string() + " l=" + str(l) + " G(x)=" + base.to_string() + " G(x+l/2^r)=" + v.to_string();
      }
    }
    report.add({{"N", str(n)}, {"r", str(r)}, {"x", x.to_string()}}, witness.empty(), witness);
  }
  return report;
}

VerificationReport check_G_scaling(std::uint64_t n, std::size_t samples, std::uint64_t seed) {
  VerificationReport report("G-scaling");
  const auto [r, m] = split_two_adic(n);
  std::mt19937_64 rng(seed ^ (n * 0xD1B54A32D192ED03ULL));
  const Rational period = pow2(-static_cast<int>(r));
  const Rational scale = pow2(static_cast<int>(r));
  for (std::size_t s = 0; s < samples; ++s) {
    const Rational x = random_rational(rng) * period;
    const Rational lhs = eval_G(m, scale * x);
    const Rational rhs = scale * eval_G(n, x);
    report.add({{"N", str(n)}, {"r", str(r)}, {"m", str(m)}, {"x", x.to_string()}}, lhs == rhs,
               lhs == rhs ? "" : "G_m(2^r x)=" + lhs.to_string() + " 2^r G_N(x)=" + rhs.to_string());
  }
  return report;
}

VerificationReport check_toshow(std::uint64_t n_max) {
  VerificationReport report("toshow");
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto set = argmin_G(n);
    const Rational phi = radical_inverse(n);
    std::string witness;
    if (set.empty() || set.front() != phi) {
      witness = "argmin=" + join(set) + " phi(N)=" + phi.to_string();
    } else if (is_power_of_two(n)) {
      const auto grid = centered_grid(n).rationals_1d();
      if (set != grid) witness = "argmin=" + join(set) + " expected Gamma_N";
    } else if (n % 2 == 1 && n >= 3 && set.size() != 1) {
      witness = "argmin=" + join(set) + " expected a singleton";
    }
    report.add({{"N", str(n)}, {"argmin_size", str(set.size())}}, witness.empty(), witness);
  }
  return report;
}

VerificationReport check_appendix(std::uint64_t n_max, std::uint64_t toshow_max, std::size_t samples,
                                  std::uint64_t seed) {
  VerificationReport report("appendix");
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    report.merge(check_G_periodicity(n, samples, seed));
    report.merge(check_G_scaling(n, samples, seed));
  }
  report.merge(check_toshow(toshow_max));
  return report;
}

// ---------------------------------------------------------------------------
// Structural checks

VerificationReport check_theorem4(std::size_t n_max, std::size_t random_starts, std::size_t start_size,
                                  std::size_t extend_to, std::uint64_t seed) {
  VerificationReport report("theorem4");
  auto check_run = [&](const std::vector<Rational>& start, std::size_t n, const std::string& label) {
    GreedyState state(DiscrepancyKind::StarL2, start);
    std::set<Rational> seen(start.begin(), start.end());
    std::string witness;
    while (state.size() < n && witness.empty()) {
      const Rational x = next_star_1d(state);
      const std::size_t index = state.size() + 1;
      if (!in_centered_grid(x, index)) {
        witness = "x_" + str(index) + "=" + x.to_string() + " not in Gamma_" + str(index);
      } else if (seen.count(x)) {
        witness = "x_" + str(index) + "=" + x.to_string() + " repeats an earlier element";
      }
      seen.insert(x);
      state.push(x);
    }
    report.add({{"start", label}, {"start_size", str(start.size())}, {"N", str(n)}}, witness.empty(), witness);
  };

  check_run({make_rational(1, 2)}, n_max, "canonical");
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < random_starts; ++s) {
    std::vector<Rational> start;
    for (std::size_t i = 0; i < start_size; ++i) start.push_back(random_rational(rng));
    check_run(start, std::max(extend_to, start_size), join(start));
  }
  return report;
}

VerificationReport check_theorem5(std::size_t n_max) {
  VerificationReport report("theorem5");
  GreedyState state(DiscrepancyKind::StarL2, {make_rational(1, 2)});
  std::multiset<Rational> interior;  // y_{k+1} - y_k for 1 <= k < N
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) {
      // New point: check the empty-cell property before inserting it.
      const Rational x = next_star_1d(state);
      const Rational cells(static_cast<long long>(n));
      const mpz_class l = [&] {
        const Rational scaled = x * cells;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
        return mpz_class(q + 1);
      }();
      const Rational cell_lo = make_rational(mpz_class(l - 1), mpz_class(static_cast<long>(n)));
      const Rational cell_hi = make_rational(l, mpz_class(static_cast<long>(n)));
      const auto& y = state.sorted();
      const auto it = std::lower_bound(y.begin(), y.end(), cell_lo);
      const bool empty_cell = it == y.end() || !(*it < cell_hi);
      report.add({{"property", "empty-cell"}, {"N", str(n)}, {"x", x.to_string()}}, empty_cell,
                 empty_cell ? "" : "cell [" + cell_lo.to_string() + ", " + cell_hi.to_string() + ") already holds " +
                                       it->to_string());

      const auto& before = state.sorted();
      const auto pos = std::upper_bound(before.begin(), before.end(), x);
      const bool has_pred = pos != before.begin();
      const bool has_succ = pos != before.end();
      if (has_pred && has_succ) interior.erase(interior.find(*pos - *std::prev(pos)));
      if (has_pred) interior.insert(x - *std::prev(pos));
      if (has_succ) interior.insert(*pos - x);
      state.push(x);
    }
    const auto& y = state.sorted();
    const Rational bound = make_rational(1, static_cast<long long>(2 * n));
    const Rational left = y.front();
    const Rational right = Rational(1) - y.back();
    const bool interior_ok = interior.empty() || !(*interior.begin() < bound);
    const bool ok = interior_ok && !(left < bound);
    std::string witness;
    if (!ok) {
      witness = "min interior gap=" + (interior.empty() ? std::string("none") : interior.begin()->to_string()) +
                " left gap=" + left.to_string() + " bound=" + bound.to_string();
    }
    report.add({{"property", "min-gap"},
                {"N", str(n)},
                {"left_gap", left.to_string()},
                {"right_gap", right.to_string()},
                {"right_gap_ok", !(right < bound) ? "yes" : "no"}},
               ok, witness);
  }
  return report;
}

VerificationReport check_theorem6(std::size_t n) {
  VerificationReport report("theorem6");
  const auto expected = van_der_corput_prefix(n).rationals_1d();
  for (auto kind : {DiscrepancyKind::PeriodicL2, DiscrepancyKind::ExtremeL2}) {
    GreedyState state(kind, {Rational(0)});
    std::string witness;
    while (state.size() < n && witness.empty()) {
      const Rational x = next_periodic_1d(state);
      const std::size_t index = state.size();
      if (x != expected[index]) {
        witness = "x_" + str(index + 1) + "=" + x.to_string() + " phi(" + str(index) + ")=" + expected[index].to_string();
      }
      state.push(x);
    }
    report.add({{"kind", std::string(to_string(kind))}, {"N", str(n)}}, witness.empty(), witness);
  }
  return report;
}

VerificationReport check_theorem_bounds(DiscrepancyKind kind, std::size_t dim, std::size_t n,
                                        const SearchConfig& cfg) {
  VerificationReport report("bounds");
  const std::string kind_name(to_string(kind));
  if (dim == 1) {
    const Rational start = kind == DiscrepancyKind::StarL2 ? make_rational(1, 2) : Rational(0);
    const Rational avg = kind == DiscrepancyKind::ExtremeL2 ? make_rational(1, 6) - make_rational(1, 12)
                                                            : make_rational(1, 2) - make_rational(1, 3);
    GreedyState state(kind, {start});
    const Rational c = max(avg, state.current_sq());
    Rational previous = state.current_sq();
    std::string step_witness;
    std::string prefix_witness;
    while (state.size() < n) {
      state.push(kind == DiscrepancyKind::StarL2 ? next_star_1d(state) : next_periodic_1d(state));
      const Rational inc = state.current_sq() - previous;
      previous = state.current_sq();
      const Rational limit = c * Rational(static_cast<long long>(state.size()));
      if (step_witness.empty() && avg < inc) {
        step_witness = "N=" + str(state.size()) + " increment=" + inc.to_string() + " > " + avg.to_string();
      }
      if (prefix_witness.empty() && limit < state.current_sq()) {
        prefix_witness = "N=" + str(state.size()) + " L^2=" + state.current_sq().to_string() + " > " + limit.to_string();
      }
    }
    const Parameters base{{"kind", kind_name}, {"d", "1"}, {"N", str(n)}, {"c", c.to_string()}};
    Parameters prefix = base;
    prefix.emplace_back("check", "prefix-bound");
    prefix.emplace_back("final_sq", format_double(state.current_sq().to_double()));
    report.add(prefix, prefix_witness.empty(), prefix_witness);
    Parameters step = base;
    step.emplace_back("check", "averaging-step");
    report.add(step, step_witness.empty(), step_witness);
    return report;
  }

  const double avg = averaging_bound(kind, dim);
  const Scalar start_coord = kind == DiscrepancyKind::StarL2 ? Scalar(make_rational(1, 2)) : Scalar(0);
  PointList start(dim);
  start.push_back(UnitPoint(std::vector<Scalar>(dim, start_coord)));
  const Parameters base{{"kind", kind_name}, {"d", str(dim)}, {"N", str(n)},
                        {"grid", str(cfg.grid_resolution)}, {"refine", str(cfg.refinement_rounds)}};
  GreedyNdResult run{PointList(dim), {}, {}};
  try {
    run = greedy_nd_run(kind, start, n, cfg);
  } catch (const SearchQualityError& e) {
    Parameters step = base;
    step.emplace_back("check", "averaging-step");
    report.add(step, false, e.what());
    return report;
  }
  const double c = std::max(avg, run.squared.front());
  std::string prefix_witness;
  for (std::size_t i = 0; i < run.squared.size() && prefix_witness.empty(); ++i) {
    const double limit = c * static_cast<double>(i + 1);
    if (run.squared[i] > limit * (1 + 1e-12) + 1e-12) {
      prefix_witness = "N=" + str(i + 1) + " L^2=" + format_double(run.squared[i]) + " > " + format_double(limit);
    }
  }
  double worst = -INFINITY;
  for (std::size_t i = 1; i < run.increments.size(); ++i) worst = std::max(worst, run.increments[i]);
  Parameters prefix = base;
  prefix.emplace_back("check", "prefix-bound");
  prefix.emplace_back("c", format_double(c));
  prefix.emplace_back("final_sq", format_double(run.squared.back()));
  report.add(prefix, prefix_witness.empty(), prefix_witness);
  Parameters step = base;
  step.emplace_back("check", "averaging-step");
  step.emplace_back("max_increment", format_double(worst));
  step.emplace_back("bound", format_double(avg));
  report.add(step, true);
  return report;
}

// ---------------------------------------------------------------------------
// Oracles

Rational brute_force_argmin(const std::function<double(double)>& objective, std::uint64_t resolution) {
  if (resolution < 1000) throw DomainError("brute-force resolution must be at least 1000");
  std::uint64_t best = 0;
  double best_value = objective(0.0);
  const double step = 1.0 / static_cast<double>(resolution);
  for (std::uint64_t j = 1; j < resolution; ++j) {
    const double v = objective(static_cast<double>(j) * step);
    if (v < best_value) {
      best_value = v;
      best = j;
    }
  }
  return make_rational(static_cast<long long>(best), static_cast<long long>(resolution));
}

std::function<double(double)> star_objective_fn(const GreedyState& state) {
  std::vector<double> pts;
  for (const auto& p : state.points()) pts.push_back(p.to_double());
  const double n1 = static_cast<double>(pts.size() + 1);
  return [pts = std::move(pts), n1](double x) {
    double total = 0.0;
    for (double p : pts) total += p > x ? p : x;
    return -2.0 * total + n1 * x * x - x;
  };
}

std::function<double(double)> periodic_objective_fn(const GreedyState& state) {
  std::vector<double> pts;
  for (const auto& p : state.points()) pts.push_back(p.to_double());
  return [pts = std::move(pts)](double x) {
    double total = 0.0;
    for (double p : pts) {
      const double d = std::fabs(p - x);
      total += d * d - d;
    }
    return total;
  };
}

VerificationReport check_oracles(std::size_t states, std::uint64_t resolution, std::uint64_t seed) {
  VerificationReport report("oracles");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(1, 50);

  auto nearest = [](const std::vector<Rational>& set, const Rational& x) {
    double best = INFINITY;
    for (const auto& s : set) best = std::min(best, std::fabs((s - x).to_double()));
    return best;
  };

  for (auto kind : {DiscrepancyKind::StarL2, DiscrepancyKind::PeriodicL2}) {
    for (std::size_t s = 0; s < states; ++s) {
      std::vector<Rational> pts;
      const std::size_t n = size_dist(rng);
      for (std::size_t i = 0; i < n; ++i) pts.push_back(random_rational(rng));
      GreedyState state(kind, pts);
      const bool star = kind == DiscrepancyKind::StarL2;
      const auto exact_set = star ? star_argmin_set(state) : periodic_argmin_set(state);
      const Rational exact_min = star ? next_star_1d(state) : next_periodic_1d(state);
      const Rational brute = brute_force_argmin(star ? star_objective_fn(state) : periodic_objective_fn(state), resolution);
      const double dist = nearest(exact_set, brute);
      // The grid point nearest to a minimizer is at most half a cell away.
      const double tol = std::max(1e-6, 1.0 / static_cast<double>(resolution));
      const auto fn = star ? star_objective_fn(state) : periodic_objective_fn(state);
      const bool not_below = fn(brute.to_double()) >= fn(exact_min.to_double()) - 1e-9;
      const bool ok = dist <= tol && not_below && !exact_set.empty() && exact_set.front() == exact_min;
      report.add({{"objective", star ? "f_N" : "h_N"}, {"N", str(n)}, {"exact", exact_min.to_string()},
                  {"brute", brute.to_string()}, {"distance", format_double(dist)}},
                 ok, ok ? "" : "state=" + join(pts));
    }
  }

  // Closed forms and recursions on small random exact lists.
  for (std::size_t s = 0; s < states; ++s) {
    std::vector<Rational> values;
    const std::size_t n = size_dist(rng);
    for (std::size_t i = 0; i < n; ++i) values.push_back(random_rational(rng, 256));
    const auto pts = PointList::from_rationals(values);
    const Scalar star = l2_star_sq(pts);
    const Scalar sorted = l2_star_sq_sorted_1d(pts);
    const Scalar extreme = l2_extreme_sq(pts);
    const Scalar periodic = l2_periodic_sq(pts);
    const bool eq4 = star.exact() == sorted.exact();
    const bool per = periodic.exact() == Rational(2) * extreme.exact();
    bool rec = true;
    for (auto kind : {DiscrepancyKind::StarL2, DiscrepancyKind::ExtremeL2, DiscrepancyKind::PeriodicL2}) {
      const auto head = pts.prefix(n - 1);
      const Scalar prev = n > 1 ? l2_sq(kind, head) : Scalar(0);
      rec = rec && l2_sq_increment(kind, prev, head, pts[n - 1]).exact() == l2_sq(kind, pts).exact();
    }
    const bool ok = eq4 && per && rec;
    report.add({{"check", "closed-forms"}, {"N", str(n)}}, ok,
               ok ? "" : "list=" + join(values) + (eq4 ? "" : " eq1!=eq4") + (per ? "" : " per!=2extr") +
                             (rec ? "" : " recursion mismatch"));
  }
  return report;
}

}  // namespace l2g
