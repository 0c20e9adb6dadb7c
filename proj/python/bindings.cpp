// pybind11 surface. Points are plain Python complex numbers; validation
// happens when they cross into the library, so bad inputs raise ValueError.
// Heavy operations release the GIL: their internal parallelism never calls
// back into Python.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "blochinterp/errors.hpp"
#include "blochinterp/functions.hpp"
#include "blochinterp/geometry.hpp"
#include "blochinterp/grid.hpp"
#include "blochinterp/interpolation.hpp"
#include "blochinterp/quadrature.hpp"
#include "blochinterp/sequences.hpp"
#include "blochinterp/serialization.hpp"

namespace py = pybind11;
using namespace blochinterp;

namespace {

std::vector<DiskPoint> as_points(const std::vector<Complex>& values) {
  std::vector<DiskPoint> points;
  points.reserve(values.size());
  for (Complex z : values) points.emplace_back(z);
  return points;
}

std::vector<Complex> as_values(const PointSequence& seq) {
  std::vector<Complex> values;
  values.reserve(seq.size());
  for (const DiskPoint& p : seq.points()) values.push_back(p.value());
  return values;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Pseudohyperbolic geometry, separation diagnostics and constructive "
      "interpolation on the unit disk";
  m.attr("__version__") = BLOCHINTERP_VERSION;

  py::register_exception<ConditioningError>(m, "ConditioningError",
                                            PyExc_RuntimeError);
  py::register_exception<QuadratureError>(m, "QuadratureError",
                                          PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError",
                                         PyExc_RuntimeError);

  py::enum_<Space>(m, "Space")
      .value("HINF", Space::HInf)
      .value("BLOCH", Space::Bloch);

  py::enum_<GridScheme>(m, "GridScheme")
      .value("RADIAL_EXPONENTIAL_AUDIT", GridScheme::RadialExponentialAudit)
      .value("GAUSS_LEGENDRE_TRAPEZOID", GridScheme::GaussLegendreTrapezoid);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](int radial, int angular, GridScheme scheme) {
             return GridSpec{radial, angular, scheme};
           }),
           py::arg("radial_nodes") = 49, py::arg("angular_nodes") = 256,
           py::arg("scheme") = GridScheme::RadialExponentialAudit)
      .def_readonly("radial_nodes", &GridSpec::radial_nodes)
      .def_readonly("angular_nodes", &GridSpec::angular_nodes)
      .def_readonly("scheme", &GridSpec::scheme)
      .def(py::self == py::self);

  m.def("audit_grid", &audit_grid);
  m.def("quadrature_grid", &quadrature_grid);
  m.def(
      "audit_point",
      [](int i, int j, const GridSpec& grid) { return audit_point(i, j, grid); },
      py::arg("radial_index"), py::arg("angular_index"), py::arg("grid"));

  py::class_<SeparationReport>(m, "SeparationReport")
      .def_readonly("delta_sep", &SeparationReport::delta_sep)
      .def_readonly("delta_unif", &SeparationReport::delta_unif)
      .def_readonly("blaschke_sum", &SeparationReport::blaschke_sum)
      .def_readonly("per_point_products",
                    &SeparationReport::per_point_products);

  py::class_<PointSequence>(m, "PointSequence")
      .def(py::init([](const std::vector<Complex>& points,
                       const std::string& label) {
             return PointSequence(as_points(points), label);
           }),
           py::arg("points"), py::arg("label") = std::string())
      .def("__len__", &PointSequence::size)
      .def("__getitem__",
           [](const PointSequence& seq, std::size_t i) {
             if (i >= seq.size()) throw py::index_error();
             return seq[i].value();
           })
      .def_property_readonly("points", &as_values)
      .def_property_readonly("label", &PointSequence::label)
      .def_property_readonly("separation", &PointSequence::separation);

  m.def("rho", [](Complex z, Complex w) { return rho(DiskPoint(z), DiskPoint(w)); },
        py::arg("z"), py::arg("w"));
  m.def("gen_geometric", &gen_geometric, py::arg("n"));
  m.def("augment_close", &augment_close, py::arg("seq"), py::arg("eps"));

  py::class_<HaymanPairCheck>(m, "HaymanPairCheck")
      .def_readonly("k", &HaymanPairCheck::k)
      .def_readonly("p", &HaymanPairCheck::p)
      .def_readonly("value", &HaymanPairCheck::value)
      .def_readonly("bound", &HaymanPairCheck::bound)
      .def_readonly("ok", &HaymanPairCheck::ok);

  py::class_<HaymanReport>(m, "HaymanReport")
      .def_readonly("indices", &HaymanReport::indices)
      .def_readonly("hypothesis_holds", &HaymanReport::hypothesis_holds)
      .def_readonly("pair_checks", &HaymanReport::pair_checks)
      .def_readonly("q", &HaymanReport::q)
      .def_readonly("q_bound", &HaymanReport::q_bound)
      .def_readonly("all_q_pass", &HaymanReport::all_q_pass)
      .def_readonly("passed", &HaymanReport::passed);

  m.def("hayman_bounds", &hayman_bounds, py::arg("seq"),
        py::arg("subsequence"));

  py::class_<AnalyticFunction>(m, "AnalyticFunction")
      .def(py::init<>())
      .def("eval", &AnalyticFunction::eval, py::arg("z"))
      .def("deriv", &AnalyticFunction::deriv, py::arg("z"))
      .def("__call__", &AnalyticFunction::operator(), py::arg("z"))
      .def_property_readonly("kind", &AnalyticFunction::kind);

  m.def("monomial", &monomial, py::arg("degree"));
  m.def("constant", &constant, py::arg("c"));
  m.def("polynomial", &polynomial, py::arg("coefficients"));
  m.def("linear_combination", &linear_combination, py::arg("coefficients"),
        py::arg("terms"));
  m.def("product", &product, py::arg("lhs"), py::arg("rhs"));
  m.def("mobius", [](Complex a) { return mobius(DiskPoint(a)); },
        py::arg("a"));
  m.def("kernel_g", [](Complex w) { return kernel_g(DiskPoint(w)); },
        py::arg("w"));
  m.def("kernel_pow",
        [](Complex w, int power) { return kernel_pow(DiskPoint(w), power); },
        py::arg("w"), py::arg("power"));
  m.def("blaschke_product", &blaschke_product, py::arg("zeros"));
  m.def("beurling_basis_function", &beurling_basis_function, py::arg("seq"),
        py::arg("k"));
  m.def("derivative", &derivative, py::arg("f"));
  m.def("primitive", &primitive, py::arg("fprime"), py::arg("f0"));
  m.def("weighted_deriv", &weighted_deriv, py::arg("f"), py::arg("z"));

  py::class_<BeurlingBasis>(m, "BeurlingBasis")
      .def_readonly("functions", &BeurlingBasis::functions)
      .def_readonly("m_est", &BeurlingBasis::m_est)
      .def_readonly("grid", &BeurlingBasis::grid);

  m.def("beurling_basis", &beurling_basis, py::arg("seq"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<BlochNormReport>(m, "BlochNormReport")
      .def_readonly("seminorm_est", &BlochNormReport::seminorm_est)
      .def_readonly("f0_abs", &BlochNormReport::f0_abs)
      .def_readonly("norm_est", &BlochNormReport::norm_est)
      .def_readonly("argmax", &BlochNormReport::argmax)
      .def_readonly("grid", &BlochNormReport::grid)
      .def_readonly("refined", &BlochNormReport::refined);

  m.def("bloch_seminorm", &bloch_seminorm, py::arg("f"),
        py::arg("grid") = audit_grid(), py::arg("refine") = true,
        py::call_guard<py::gil_scoped_release>());

  py::class_<PrimitiveBoundReport>(m, "PrimitiveBoundReport")
      .def_readonly("weighted_sup", &PrimitiveBoundReport::weighted_sup)
      .def_readonly("f0_abs", &PrimitiveBoundReport::f0_abs)
      .def_readonly("seminorm_est", &PrimitiveBoundReport::seminorm_est)
      .def_readonly("norm_bound", &PrimitiveBoundReport::norm_bound)
      .def_readonly("holds", &PrimitiveBoundReport::holds);

  m.def("check_primitive_bound", &check_primitive_bound, py::arg("f"),
        py::arg("grid") = audit_grid(),
        py::call_guard<py::gil_scoped_release>());

  py::class_<InterpolationProblem>(m, "InterpolationProblem")
      .def(py::init<PointSequence, std::vector<Complex>, Space>(),
           py::arg("sequence"), py::arg("targets"), py::arg("space"))
      .def_readonly("sequence", &InterpolationProblem::sequence)
      .def_readonly("targets", &InterpolationProblem::targets)
      .def_readonly("space", &InterpolationProblem::space)
      .def("sup_target", &InterpolationProblem::sup_target);

  py::class_<SimpleDecomposition>(m, "SimpleDecomposition")
      .def_readonly("levels", &SimpleDecomposition::levels)
      .def_readonly("parts", &SimpleDecomposition::parts);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("residuals", &ResidualReport::residuals)
      .def_readonly("max_residual", &ResidualReport::max_residual)
      .def_readonly("tol", &ResidualReport::tol)
      .def_readonly("passed", &ResidualReport::pass)
      .def_readonly("norm_bound_check", &ResidualReport::norm_bound_check)
      .def_readonly("seminorm_est", &ResidualReport::seminorm_est)
      .def_readonly("m_est", &ResidualReport::m_est)
      .def_readonly("norm_bound_ok", &ResidualReport::norm_bound_ok);

  m.def("interpolate_hinf", &interpolate_hinf, py::arg("problem"),
        py::call_guard<py::gil_scoped_release>());
  m.def("interpolate_bloch", &interpolate_bloch, py::arg("problem"),
        py::call_guard<py::gil_scoped_release>());
  m.def("append_point",
        [](const AnalyticFunction& f, const PointSequence& seq, Complex z0,
           Complex a1) { return append_point(f, seq, DiskPoint(z0), a1); },
        py::arg("f"), py::arg("seq"), py::arg("z0"), py::arg("a1"));
  m.def("simple_function_compose", &simple_function_compose, py::arg("seq"),
        py::arg("levels"), py::arg("parts"), py::arg("space"),
        py::call_guard<py::gil_scoped_release>());
  m.def("quantize_to_simple", &quantize_to_simple, py::arg("targets"),
        py::arg("eps"));
  m.def("verify", &verify, py::arg("problem"), py::arg("f"),
        py::arg("tol") = kDefaultResidualTol,
        py::call_guard<py::gil_scoped_release>());

  m.def("bergman_pairing", &bergman_pairing, py::arg("f"), py::arg("h"),
        py::arg("grid") = quadrature_grid(),
        py::call_guard<py::gil_scoped_release>());

  m.def("sequence_to_json",
        [](const PointSequence& seq) { return to_json(seq).dump(2); },
        py::arg("seq"));
  m.def("sequence_from_json",
        [](const std::string& text) {
          return sequence_from_json(Json::parse(text));
        },
        py::arg("text"));
  m.def("function_to_json",
        [](const AnalyticFunction& f) { return to_json(f).dump(2); },
        py::arg("f"));
  m.def("function_from_json",
        [](const std::string& text) {
          return function_from_json(Json::parse(text));
        },
        py::arg("text"));
}
