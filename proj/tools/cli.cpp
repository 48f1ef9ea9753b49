#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "l2greedy/discrepancy.hpp"
#include "l2greedy/error.hpp"
#include "l2greedy/greedy.hpp"
#include "l2greedy/io.hpp"
#include "l2greedy/sequences.hpp"
#include "l2greedy/verify.hpp"

namespace l2g::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by `generate` and the generator form of `discrepancy`.
struct SourceOptions {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t dim = 1;
  std::string start;
  std::size_t grid_resolution = 0;  // 0: not given
  std::size_t refinement_rounds = 3;
};

const std::vector<std::string> kAlgorithms = {"greedy-star", "greedy-extreme", "greedy-periodic",
                                              "vdc",         "vdc-sym",        "grid"};

void add_source_flags(CLI::App* cmd, SourceOptions& o) {
  cmd->add_option("--algorithm", o.algorithm, "Sequence to generate")->check(CLI::IsMember(kAlgorithms));
  cmd->add_option("--n", o.n, "Number of points")->check(CLI::PositiveNumber);
  cmd->add_option("--dim", o.dim, "Dimension (greedy algorithms only)")->check(CLI::PositiveNumber);
  cmd->add_option("--start", o.start, "Start set file (greedy algorithms only)");
  cmd->add_option("--grid-resolution", o.grid_resolution, "Midpoints per axis in the d>1 candidate grid")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  cmd->add_option("--refinement-rounds", o.refinement_rounds, "Local refinements of the d>1 search");
}

DiscrepancyKind greedy_kind(const std::string& algorithm) {
  if (algorithm == "greedy-star") return DiscrepancyKind::StarL2;
  if (algorithm == "greedy-extreme") return DiscrepancyKind::ExtremeL2;
  return DiscrepancyKind::PeriodicL2;
}

PointList generate_points(const SourceOptions& o) {
  if (o.n == 0) throw UsageError("--n is required");
  const bool greedy = o.algorithm.rfind("greedy-", 0) == 0;
  if (!greedy) {
    if (o.dim != 1) throw UsageError("--dim applies to the greedy algorithms only");
    if (!o.start.empty()) throw UsageError("--start applies to the greedy algorithms only");
    if (o.algorithm == "vdc") return van_der_corput_prefix(o.n);
    if (o.algorithm == "vdc-sym") return symmetrized_vdc_prefix(o.n);
    return centered_grid(o.n);
  }

  const DiscrepancyKind kind = greedy_kind(o.algorithm);
  std::optional<PointList> start;
  if (!o.start.empty()) {
    start = read_sequence_file(o.start);
    if (start->dim() != o.dim) {
      throw UsageError("start file has dimension " + std::to_string(start->dim()) + ", --dim is " +
                       std::to_string(o.dim));
    }
    if (start->size() > o.n) throw UsageError("start set is longer than --n");
  }

  if (o.dim == 1) {
    std::vector<Rational> seed = start ? start->rationals_1d() : std::vector<Rational>{};
    if (seed.empty()) seed.push_back(kind == DiscrepancyKind::StarL2 ? make_rational(1, 2) : Rational(0));
    return run_greedy_1d(kind, seed, o.n).to_point_list();
  }

  if (o.grid_resolution == 0) throw UsageError("--dim > 1 requires --grid-resolution");
  if (!start) {
    const Scalar c = kind == DiscrepancyKind::StarL2 ? Scalar(make_rational(1, 2)) : Scalar(0);
    start.emplace(o.dim);
    start->push_back(UnitPoint(std::vector<Scalar>(o.dim, c)));
  }
  SearchConfig cfg;
  cfg.grid_resolution = o.grid_resolution;
  cfg.refinement_rounds = o.refinement_rounds;
  return greedy_nd(kind, *start, o.n, cfg);
}

PointList to_float(const PointList& pts) { return PointList::from_doubles(pts.dim(), pts.to_doubles()); }

// ---------------------------------------------------------------------------

int cmd_generate(const SourceOptions& o, bool exact, bool float_mode, std::ostream& out) {
  if (o.algorithm.empty()) throw UsageError("--algorithm is required");
  if (exact && float_mode) throw UsageError("--exact and --float are mutually exclusive");
  if (o.dim > 1 && exact) throw UsageError("--dim > 1 runs in float mode; --exact is not available");
  const PointList pts = generate_points(o);
  write_sequence(out, float_mode ? to_float(pts) : pts);
  return 0;
}

struct DiscrepancyOptions {
  std::string kind;
  std::string input;
  bool curve = false;
  bool exact = false;
  bool paranoid = false;
};

bool agrees(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  const double x = a.to_double();
  const double y = b.to_double();
  return std::fabs(x - y) <= 1e-10 * std::max({1.0, std::fabs(x), std::fabs(y)});
}

int cmd_discrepancy(const DiscrepancyOptions& d, const SourceOptions& o, std::ostream& out, std::ostream& err) {
  const auto kind = parse_discrepancy_kind(d.kind);
  if (!kind) throw UsageError("unknown --kind " + d.kind);
  if (d.input.empty() == o.algorithm.empty()) throw UsageError("give exactly one of --input and --algorithm");

  PointList pts(1);
  if (!d.input.empty()) {
    if (o.n != 0 || !o.start.empty()) throw UsageError("--n and --start need --algorithm");
    pts = read_sequence_file(d.input);
  } else {
    pts = generate_points(o);
  }
  if (*kind == DiscrepancyKind::StarSup && pts.dim() != 1) {
    throw UsageError("star-sup is only available in dimension 1");
  }
  if (d.exact && !pts.is_exact()) throw UsageError("--exact needs exact coordinates");

  const bool sup = *kind == DiscrepancyKind::StarSup;
  std::vector<Scalar> values;
  if (d.curve) {
    values = sup ? star_sup_curve_1d(pts) : l2_sq_curve(*kind, pts);
  } else {
    values.push_back(sup ? star_sup_1d(pts) : l2_sq(*kind, pts));
  }

  if (d.paranoid && d.curve) {
    std::size_t checked = 0;
    for (std::size_t n = 64; n <= pts.size() + 63; n += 64) {
      const std::size_t m = std::min(n, pts.size());
      const PointList head = pts.prefix(m);
      const Scalar direct = sup ? star_sup_1d(head) : l2_sq(*kind, head);
      if (!agrees(direct, values[m - 1])) {
        err << "paranoid check failed at N=" << m << ": incremental " << values[m - 1].to_string() << ", direct "
            << direct.to_string() << '\n';
        return 1;
      }
      ++checked;
    }
    err << "# paranoid: " << checked << " prefixes agree with the direct formula\n";
  }

  out << (d.exact && !sup ? "N,value_sq\n" : "N,value\n");
  const std::size_t first = d.curve ? 1 : pts.size();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << first + i << ',';
    if (d.exact) {
      out << values[i].exact().to_string();
    } else {
      const double v = values[i].to_double();
      out << format_double(sup ? v : std::sqrt(std::max(0.0, v)));
    }
    out << '\n';
  }
  return 0;
}

int cmd_compare(std::size_t n_max, std::ostream& out, std::ostream& err) {
  const auto rows = compare_dataset(n_max);
  out << "N,L2star_Sstar,L2star_Vsym,Dstar_Sstar,Dstar_V\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.l2_star_greedy) << ',' << format_double(r.l2_star_vdc_sym) << ','
        << format_double(r.dstar_greedy) << ',' << format_double(r.dstar_vdc) << '\n';
  }
  const auto s = summarize(rows);
  err << "# fraction of N with L2(S*) < L2(Vsym): " << format_double(s.fraction_l2_greedy_better) << '\n'
      << "# window N in [" << s.window_lo << ", " << s.window_hi << "]\n"
      << "# max L2/sqrt(log N): S* " << format_double(s.max_l2_over_sqrt_log_greedy) << ", Vsym "
      << format_double(s.max_l2_over_sqrt_log_vdc_sym) << " (limsup bound for Vsym 0.319553)\n"
      << "# max D*/log N: S* " << format_double(s.max_dstar_over_log_greedy) << ", V "
      << format_double(s.max_dstar_over_log_vdc) << " (limsup for V 1/(3 log 2) = 0.480898)\n";
  return 0;
}

struct VerifyOptions {
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::string report;
  std::string kind;
  std::size_t dim = 1;
  std::size_t samples = 50;
  std::uint64_t resolution = 1000000;
  std::size_t grid_resolution = 32;
  std::size_t refinement_rounds = 3;
  bool verbose = false;
};

const std::vector<std::string> kSuites = {"theorem4", "theorem5", "theorem6", "bounds", "appendix", "oracles"};

int cmd_verify(const VerifyOptions& v, std::ostream& out) {
  if (v.n == 0) throw UsageError("--n is required");
  VerificationReport report(v.suite);
  if (v.suite == "theorem4") {
    report = check_theorem4(v.n, 20, 5, 200, v.seed);
  } else if (v.suite == "theorem5") {
    report = check_theorem5(v.n);
  } else if (v.suite == "theorem6") {
    report = check_theorem6(v.n);
  } else if (v.suite == "bounds") {
    std::vector<DiscrepancyKind> kinds;
    if (v.kind.empty()) {
      kinds = {DiscrepancyKind::StarL2, DiscrepancyKind::ExtremeL2, DiscrepancyKind::PeriodicL2};
    } else {
      const auto k = parse_discrepancy_kind(v.kind);
      if (!k || *k == DiscrepancyKind::StarSup) throw UsageError("--kind must be an L2 kind");
      kinds = {*k};
    }
    SearchConfig cfg;
    cfg.grid_resolution = v.grid_resolution;
    cfg.refinement_rounds = v.refinement_rounds;
    for (auto k : kinds) report.merge(check_theorem_bounds(k, v.dim, v.n, cfg));
  } else if (v.suite == "appendix") {
    report = check_appendix(std::min<std::size_t>(v.n, 64), v.n, v.samples, v.seed);
  } else {
    report = check_oracles(v.n, v.resolution, v.seed);
  }

  out << report.to_text(v.verbose);
  if (!v.report.empty()) {
    std::ofstream file(v.report, std::ios::binary);
    if (!file) throw UsageError("cannot write " + v.report);
    file << report.to_jsonl();
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<CompareRow> compare_dataset(std::size_t n_max) {
  if (n_max < 2) throw DomainError("compare needs n_max >= 2");
  GreedyState greedy(DiscrepancyKind::StarL2, {});
  GreedyState vdc_sym(DiscrepancyKind::StarL2, {});
  const auto sym = symmetrized_vdc_prefix(n_max).rationals_1d();
  std::vector<CompareRow> rows(n_max);
  for (std::size_t i = 0; i < n_max; ++i) {
    greedy.push(i == 0 ? make_rational(1, 2) : next_star_1d(greedy));
    vdc_sym.push(sym[i]);
    rows[i].n = i + 1;
    rows[i].l2_star_greedy = std::sqrt(greedy.current_sq().to_double());
    rows[i].l2_star_vdc_sym = std::sqrt(vdc_sym.current_sq().to_double());
  }
  const auto d_greedy = star_sup_curve_1d(greedy.to_point_list());
  const auto d_vdc = star_sup_curve_1d(van_der_corput_prefix(n_max));
  for (std::size_t i = 0; i < n_max; ++i) {
    rows[i].dstar_greedy = d_greedy[i].to_double();
    rows[i].dstar_vdc = d_vdc[i].to_double();
  }
  return rows;
}

CompareSummary summarize(const std::vector<CompareRow>& rows) {
  CompareSummary s{};
  if (rows.empty()) return s;
  std::size_t better = 0;
  for (const auto& r : rows) better += r.l2_star_greedy < r.l2_star_vdc_sym ? 1 : 0;
  s.fraction_l2_greedy_better = static_cast<double>(better) / static_cast<double>(rows.size());
  s.window_hi = rows.back().n;
  s.window_lo = s.window_hi >= 100 ? 100 : 2;
  for (const auto& r : rows) {
    if (r.n < s.window_lo) continue;
    const double lg = std::log(static_cast<double>(r.n));
    s.max_l2_over_sqrt_log_greedy = std::max(s.max_l2_over_sqrt_log_greedy, r.l2_star_greedy / std::sqrt(lg));
    s.max_l2_over_sqrt_log_vdc_sym = std::max(s.max_l2_over_sqrt_log_vdc_sym, r.l2_star_vdc_sym / std::sqrt(lg));
    s.max_dstar_over_log_greedy = std::max(s.max_dstar_over_log_greedy, r.dstar_greedy / lg);
    s.max_dstar_over_log_vdc = std::max(s.max_dstar_over_log_vdc, r.dstar_vdc / lg);
  }
  return s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy L2-discrepancy sequences and discrepancy evaluation", "l2greedy"};
  app.require_subcommand(1);

  SourceOptions gen;
  bool gen_exact = false;
  bool gen_float = false;
  auto* generate = app.add_subcommand("generate", "Write the first n points of a sequence");
  add_source_flags(generate, gen);
  generate->add_flag("--exact", gen_exact, "Exact p/q output (default in dimension 1)");
  generate->add_flag("--float", gen_float, "Decimal output with 17 significant digits");

  SourceOptions src;
  DiscrepancyOptions disc;
  auto* discrepancy = app.add_subcommand(
      "discrepancy", "CSV of a discrepancy (the square root for L2 kinds; squared p/q values under --exact)");
  discrepancy->add_option("--kind", disc.kind, "star-l2, extreme-l2, periodic-l2 or star-sup")->required();
  discrepancy->add_option("--input", disc.input, "Sequence file");
  add_source_flags(discrepancy, src);
  discrepancy->add_flag("--curve", disc.curve, "Every prefix N = 1..n instead of N = n only");
  discrepancy->add_flag("--exact", disc.exact, "Exact rational output");
  discrepancy->add_flag("--paranoid", disc.paranoid, "Cross-check every 64th prefix of a curve");

  std::size_t n_max = 0;
  auto* compare = app.add_subcommand("compare", "Greedy star sequence against van der Corput, N = 1..n-max");
  compare->add_option("--n-max", n_max, "Largest N")->required()->check(CLI::Range(std::size_t{2}, SIZE_MAX));

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", ver.suite, "Suite name")->required()->check(CLI::IsMember(kSuites));
  verify->add_option("--n", ver.n, "Size parameter (largest N, or number of states for oracles)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", ver.seed, "Random seed");
  verify->add_option("--report", ver.report, "Write one JSON record per case to this file");
  verify->add_option("--kind", ver.kind, "bounds: restrict to one L2 kind");
  verify->add_option("--dim", ver.dim, "bounds: dimension")->check(CLI::PositiveNumber);
  verify->add_option("--samples", ver.samples, "appendix: random samples per N")->check(CLI::PositiveNumber);
  verify->add_option("--resolution", ver.resolution, "oracles: brute-force grid size")
      ->check(CLI::Range(std::uint64_t{1000}, UINT64_MAX));
  verify->add_option("--grid-resolution", ver.grid_resolution, "bounds: d>1 candidate grid")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  verify->add_option("--refinement-rounds", ver.refinement_rounds, "bounds: d>1 refinements");
  verify->add_flag("--verbose", ver.verbose, "List passing cases too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return cmd_generate(gen, gen_exact, gen_float, out);
    if (*discrepancy) return cmd_discrepancy(disc, src, out, err);
    if (*compare) return cmd_compare(n_max, out, err);
    return cmd_verify(ver, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const SearchQualityError& e) {
    err << "search failed: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace l2g::cli
