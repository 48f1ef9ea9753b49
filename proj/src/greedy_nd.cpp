#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "kernels.hpp"
#include "l2greedy/error.hpp"
#include "l2greedy/greedy.hpp"

namespace l2g {

namespace {

double inv_pow(double base, std::size_t d) { return std::pow(base, -static_cast<double>(d)); }

std::size_t thread_count(const SearchConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("L2GREEDY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

// Incremental double-precision view of the points generated so far.
class NdState {
 public:
  NdState(DiscrepancyKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  std::size_t size() const { return x_.size() / dim_; }
  const std::vector<double>& coords() const { return x_; }

  double objective(const double* y) const { return nd_objective_raw(y); }

  /// Squared-discrepancy increase caused by appending y.
  double increment(const double* y) const {
    const auto n = static_cast<double>(size());
    const double obj = objective(y);
    switch (kind_) {
      case DiscrepancyKind::StarL2:
        return (2 * n + 1) * inv_pow(3, dim_) - 2 * inv_pow(2, dim_) * singles_.value() + obj;
      case DiscrepancyKind::ExtremeL2:
        return (2 * n + 1) * inv_pow(12, dim_) - 2 * inv_pow(2, dim_) * singles_.value() + obj;
      default:
        return -(2 * n + 1) * inv_pow(3, dim_) + inv_pow(2, dim_) + 2 * obj;
    }
  }

  void push(const double* y) {
    double single = 1.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      single *= kind_ == DiscrepancyKind::StarL2 ? detail::star_single(y[i]) : detail::extreme_single(y[i]);
    }
    singles_.add(single);
    x_.insert(x_.end(), y, y + dim_);
  }

  double nd_objective_raw(const double* y) const {
    const std::size_t n = size();
    const double half = 2 * inv_pow(2, dim_);
    detail::Sum<double> pairs;
    double self = 1.0;
    switch (kind_) {
      case DiscrepancyKind::StarL2: {
        for (std::size_t m = 0; m < n; ++m) {
          double p = 1.0;
          for (std::size_t i = 0; i < dim_; ++i) p *= detail::star_pair(x_[m * dim_ + i], y[i]);
          pairs.add(p);
        }
        double lin = 1.0;
        for (std::size_t i = 0; i < dim_; ++i) {
          self *= detail::star_single(y[i]);
          lin *= 1.0 - y[i];
        }
        return -static_cast<double>(n + 1) * half * self + 2 * pairs.value() + lin;
      }
      case DiscrepancyKind::ExtremeL2: {
        for (std::size_t m = 0; m < n; ++m) {
          double p = 1.0;
          for (std::size_t i = 0; i < dim_; ++i) p *= detail::extreme_pair(x_[m * dim_ + i], y[i]);
          pairs.add(p);
        }
        for (std::size_t i = 0; i < dim_; ++i) self *= detail::extreme_single(y[i]);
        return (1.0 - static_cast<double>(n + 1) * half) * self + 2 * pairs.value();
      }
      case DiscrepancyKind::PeriodicL2: {
        for (std::size_t m = 0; m < n; ++m) {
          double p = 1.0;
          for (std::size_t i = 0; i < dim_; ++i) p *= detail::periodic_pair(x_[m * dim_ + i], y[i]);
          pairs.add(p);
        }
        return pairs.value();
      }
      case DiscrepancyKind::StarSup:
        break;
    }
    throw DomainError("star-sup has no greedy objective");
  }

 private:
  DiscrepancyKind kind_;
  std::size_t dim_;
  std::vector<double> x_;
  detail::Sum<double> singles_;
};

// Values of the objective on the tensor product of per-axis candidate lists,
// enumerated in lexicographic order (axis 0 most significant).
std::vector<double> evaluate_grid(const NdState& state, const std::vector<std::vector<double>>& axes,
                                  std::size_t threads) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  std::vector<double> values(total);
  const std::size_t dim = axes.size();
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<double> y(dim);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = dim; i-- > 0;) {
        y[i] = axes[i][rest % axes[i].size()];
        rest /= axes[i].size();
      }
      values[idx] = state.objective(y.data());
    }
  };
  threads = std::min(threads, total);
  if (threads <= 1) {
    work(0, total);
    return values;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (total + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t b = t * chunk;
    const std::size_t e = std::min(total, b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  return values;
}

// Lexicographically first candidate whose value is within a relative 1e-12 of
// every later improvement. Sequential, so independent of the thread count.
std::size_t select(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double tol = 1e-12 * std::max(1.0, std::fabs(values[best]));
    if (values[i] < values[best] - tol) best = i;
  }
  return best;
}

std::vector<double> decode(const std::vector<std::vector<double>>& axes, std::size_t idx) {
  std::vector<double> y(axes.size());
  for (std::size_t i = axes.size(); i-- > 0;) {
    y[i] = axes[i][idx % axes[i].size()];
    idx /= axes[i].size();
  }
  return y;
}

std::vector<double> search(const NdState& state, std::size_t dim, const SearchConfig& cfg, std::size_t threads) {
  const std::size_t r = cfg.grid_resolution;
  std::vector<double> axis(r);
  for (std::size_t j = 0; j < r; ++j) axis[j] = (static_cast<double>(j) + 0.5) / static_cast<double>(r);
  std::vector<std::vector<double>> axes(dim, axis);
  auto values = evaluate_grid(state, axes, threads);
  std::size_t best = select(values);
  std::vector<double> incumbent = decode(axes, best);

  const std::size_t half = std::max<std::size_t>(1, r / 2);
  double spacing = 1.0 / static_cast<double>(r);
  for (std::size_t round = 0; round < cfg.refinement_rounds; ++round) {
    spacing /= static_cast<double>(half);
    for (std::size_t i = 0; i < dim; ++i) {
      axes[i].clear();
      for (long t = -static_cast<long>(half); t <= static_cast<long>(half); ++t) {
        const double v = incumbent[i] + static_cast<double>(t) * spacing;
        if (v >= 0.0 && v < 1.0) axes[i].push_back(v);
      }
    }
    values = evaluate_grid(state, axes, threads);
    best = select(values);
    incumbent = decode(axes, best);
  }
  return incumbent;
}

}  // namespace

double averaging_bound(DiscrepancyKind kind, std::size_t dim) {
  switch (kind) {
    case DiscrepancyKind::StarL2:
    case DiscrepancyKind::PeriodicL2:
      return inv_pow(2, dim) - inv_pow(3, dim);
    case DiscrepancyKind::ExtremeL2:
      return inv_pow(6, dim) - inv_pow(12, dim);
    case DiscrepancyKind::StarSup:
      break;
  }
  throw DomainError("star-sup has no averaging bound");
}

double nd_objective(DiscrepancyKind kind, const std::vector<double>& x, std::size_t dim,
                    const std::vector<double>& y) {
  if (y.size() != dim || x.size() % dim != 0) throw DomainError("dimension mismatch");
  NdState state(kind, dim);
  for (std::size_t i = 0; i < x.size(); i += dim) state.push(x.data() + i);
  return state.objective(y.data());
}

GreedyNdResult greedy_nd_run(DiscrepancyKind kind, const PointList& start, std::size_t n,
                             const SearchConfig& cfg) {
  if (kind == DiscrepancyKind::StarSup) throw DomainError("greedy constructions need an L2 discrepancy kind");
  if (start.empty()) throw DomainError("d-dimensional greedy needs a nonempty start set");
  if (n < start.size()) throw DomainError("target length is shorter than the start set");
  if (cfg.grid_resolution < 2) throw DomainError("grid_resolution must be at least 2");

  const std::size_t dim = start.dim();
  const std::size_t threads = thread_count(cfg);
  const double bound = averaging_bound(kind, dim);
  NdState state(kind, dim);
  GreedyNdResult result{PointList(dim), {}, {}};
  double current = 0.0;

  auto append = [&](const std::vector<double>& y) {
    const double inc = state.increment(y.data());
    current += inc;
    state.push(y.data());
    result.squared.push_back(current);
    result.increments.push_back(inc);
    std::vector<Scalar> c(y.begin(), y.end());
    result.points.push_back(UnitPoint(std::move(c)));
    return inc;
  };

  const auto start_coords = start.to_doubles();
  for (std::size_t i = 0; i < start.size(); ++i) {
    append(std::vector<double>(start_coords.begin() + static_cast<std::ptrdiff_t>(i * dim),
                               start_coords.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim)));
  }
  while (state.size() < n) {
    const auto y = search(state, dim, cfg, threads);
    const double inc = append(y);
    const double tol = 1e-9 * std::max(1.0, static_cast<double>(state.size()));
    if (inc > bound + tol) {
      throw SearchQualityError("step " + std::to_string(state.size()) + " increased the squared " +
                               std::string(to_string(kind)) + " discrepancy by " + format_double(inc) +
                               " > averaging bound " + format_double(bound) + "; use a finer grid");
    }
  }
  return result;
}

PointList greedy_nd(DiscrepancyKind kind, const PointList& start, std::size_t n, const SearchConfig& cfg) {
  return greedy_nd_run(kind, start, n, cfg).points;
}

}  // namespace l2g
