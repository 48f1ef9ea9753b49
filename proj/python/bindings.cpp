// Python bindings. Exact values cross the boundary as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l2greedy/discrepancy.hpp"
#include "l2greedy/error.hpp"
#include "l2greedy/greedy.hpp"
#include "l2greedy/sequences.hpp"
#include "l2greedy/verify.hpp"

namespace py = pybind11;
using namespace l2g;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::object to_py(const Rational& r) { return fraction_type()(py::str(r.to_string())); }

py::object to_py(const Scalar& s) {
  if (s.is_exact()) return to_py(s.exact());
  return py::float_(s.to_double());
}

Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) return Scalar(h.cast<double>());
  if (py::isinstance<py::int_>(h) || py::isinstance(h, fraction_type())) {
    const auto num = py::str(h.attr("numerator")).cast<std::string>();
    const auto den = py::str(h.attr("denominator")).cast<std::string>();
    return Scalar(Rational::parse(num + "/" + den));
  }
  if (py::isinstance<py::str>(h)) return Scalar(Rational::parse(h.cast<std::string>()));
  throw py::type_error("coordinates must be int, float, str or fractions.Fraction");
}

Rational to_rational(const py::handle& h) {
  const Scalar s = to_scalar(h);
  if (!s.is_exact()) throw py::type_error("an exact value (int, str or Fraction) is required");
  return s.exact();
}

// A flat sequence is a one-dimensional list; a sequence of sequences is a list of points.
PointList to_points(const py::sequence& seq) {
  if (py::len(seq) == 0) throw DomainError("empty point list");
  const py::handle first = seq[0];
  const bool nested = py::isinstance<py::sequence>(first) && !py::isinstance<py::str>(first);
  const std::size_t dim = nested ? py::len(first) : 1;
  PointList pts(dim);
  for (const auto& item : seq) {
    std::vector<Scalar> c;
    if (nested) {
      for (const auto& v : item.cast<py::sequence>()) c.push_back(to_scalar(v));
    } else {
      c.push_back(to_scalar(item));
    }
    pts.push_back(UnitPoint(std::move(c)));
  }
  return pts;
}

py::list from_points(const PointList& pts) {
  py::list out;
  for (const auto& p : pts) {
    if (pts.dim() == 1) {
      out.append(to_py(p[0]));
    } else {
      py::tuple t(p.dim());
      for (std::size_t i = 0; i < p.dim(); ++i) t[i] = to_py(p[i]);
      out.append(t);
    }
  }
  return out;
}

py::list from_rationals(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(to_py(r));
  return out;
}

DiscrepancyKind kind_of(const std::string& name) {
  const auto k = parse_discrepancy_kind(name);
  if (!k) throw py::value_error("unknown discrepancy kind '" + name + "'");
  return *k;
}

std::vector<Rational> start_of(const py::object& start) {
  std::vector<Rational> out;
  if (start.is_none()) return out;
  for (const auto& v : start.cast<py::sequence>()) out.push_back(to_rational(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Greedy L2-discrepancy sequences and discrepancy evaluators";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SearchQualityError>(m, "SearchQualityError", PyExc_RuntimeError);

  m.def("radical_inverse", [](std::uint64_t n) { return to_py(radical_inverse(n)); }, py::arg("n"));
  m.def("van_der_corput", [](std::size_t n) { return from_points(van_der_corput_prefix(n)); }, py::arg("n"));
  m.def("symmetrized_van_der_corput", [](std::size_t n) { return from_points(symmetrized_vdc_prefix(n)); },
        py::arg("n"));
  m.def("centered_grid", [](std::size_t n) { return from_points(centered_grid(n)); }, py::arg("n"));

  m.def(
      "l2_sq",
      [](const std::string& kind, const py::sequence& points) { return to_py(l2_sq(kind_of(kind), to_points(points))); },
      py::arg("kind"), py::arg("points"),
      "Squared L2 discrepancy; exact (Fraction) when every coordinate is exact.");
  m.def(
      "l2_sq_curve",
      [](const std::string& kind, const py::sequence& points) {
        py::list out;
        for (const auto& v : l2_sq_curve(kind_of(kind), to_points(points))) out.append(to_py(v));
        return out;
      },
      py::arg("kind"), py::arg("points"));
  m.def(
      "star_sup", [](const py::sequence& points) { return to_py(star_sup_1d(to_points(points))); }, py::arg("points"),
      "Unnormalized sup-norm star discrepancy of a one-dimensional list.");

  m.def(
      "greedy_1d",
      [](const std::string& kind, std::size_t n, const py::object& start) {
        const DiscrepancyKind k = kind_of(kind);
        auto seed = start_of(start);
        if (seed.empty()) seed.push_back(k == DiscrepancyKind::StarL2 ? make_rational(1, 2) : Rational(0));
        return from_rationals(run_greedy_1d(k, seed, n).points());
      },
      py::arg("kind"), py::arg("n"), py::arg("start") = py::none(),
      "Exact one-dimensional greedy sequence of length n.");
  m.def(
      "greedy_nd",
      [](const std::string& kind, std::size_t n, std::size_t dim, std::size_t grid_resolution,
         std::size_t refinement_rounds) {
        const DiscrepancyKind k = kind_of(kind);
        PointList start(dim);
        const Scalar c = k == DiscrepancyKind::StarL2 ? Scalar(make_rational(1, 2)) : Scalar(0);
        start.push_back(UnitPoint(std::vector<Scalar>(dim, c)));
        SearchConfig cfg;
        cfg.grid_resolution = grid_resolution;
        cfg.refinement_rounds = refinement_rounds;
        py::gil_scoped_release release;
        auto pts = greedy_nd(k, start, n, cfg);
        py::gil_scoped_acquire acquire;
        return from_points(pts);
      },
      py::arg("kind"), py::arg("n"), py::arg("dim"), py::arg("grid_resolution") = 32,
      py::arg("refinement_rounds") = 3);

  m.def(
      "eval_G", [](std::uint64_t n, const py::object& x) { return to_py(eval_G(n, to_rational(x))); }, py::arg("n"),
      py::arg("x"));
  m.def("argmin_G", [](std::uint64_t n) { return from_rationals(argmin_G(n)); }, py::arg("n"));

  m.def(
      "verify",
      [](const std::string& suite, std::size_t n, std::uint64_t seed) {
        VerificationReport r(suite);
        if (suite == "theorem4") {
          r = check_theorem4(n, 20, 5, 200, seed);
        } else if (suite == "theorem5") {
          r = check_theorem5(n);
        } else if (suite == "theorem6") {
          r = check_theorem6(n);
        } else if (suite == "appendix") {
          r = check_appendix(std::min<std::size_t>(n, 64), n, 50, seed);
        } else if (suite == "oracles") {
          r = check_oracles(n, 1000000, seed);
        } else {
          throw py::value_error("unknown suite '" + suite + "'");
        }
        return py::make_tuple(r.ok(), r.to_text());
      },
      py::arg("suite"), py::arg("n"), py::arg("seed") = 1, "Runs a verification suite; returns (ok, text report).");
}
