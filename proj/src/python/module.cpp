#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teichcurve/teichcurve.hpp"

namespace py = pybind11;
using namespace teichcurve;

namespace {

std::vector<MapSample> to_samples(const std::vector<std::pair<double, double>>& pts) {
  std::vector<MapSample> s;
  s.reserve(pts.size());
  for (const auto& [x, y] : pts) s.push_back({x, y});
  return s;
}

std::vector<std::pair<double, double>> from_samples(const std::vector<MapSample>& s) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(s.size());
  for (const auto& p : s) pts.emplace_back(p.x, p.y);
  return pts;
}

std::vector<QsProbe> to_probes(const std::vector<std::pair<double, double>>& pts) {
  std::vector<QsProbe> p;
  for (const auto& [x, t] : pts) p.push_back({x, t});
  return p;
}

std::vector<Complex> to_vector(std::span<const Complex> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_teichcurve, m) {
  m.doc() = "Bers isomorphism on the universal Teichmuller curve: numerical core";

  auto base = py::register_exception<Error>(m, "TeichcurveError");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<InvalidMapError>(m, "InvalidMapError", base.ptr());
  py::register_exception<BranchAmbiguityError>(m, "BranchAmbiguityError", base.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base.ptr());

  // series
  py::class_<CuspFormCoeffs>(m, "CuspFormCoeffs")
      .def(py::init<std::vector<Complex>>(), py::arg("alphas"))
      .def_property_readonly("order", &CuspFormCoeffs::order)
      .def_property_readonly("coeffs", [](const CuspFormCoeffs& c) { return to_vector(c.coeffs()); })
      .def("alpha", &CuspFormCoeffs::alpha);
  py::class_<PeriodicPotential>(m, "PeriodicPotential")
      .def_property_readonly("coeffs", [](const PeriodicPotential& p) { return to_vector(p.coeffs()); });
  py::class_<DiscTaylorCoeffs>(m, "DiscTaylorCoeffs")
      .def(py::init<int, std::vector<Complex>>(), py::arg("start_index"), py::arg("coeffs"))
      .def_property_readonly("start_index", &DiscTaylorCoeffs::start_index)
      .def_property_readonly("coeffs", [](const DiscTaylorCoeffs& p) { return to_vector(p.coeffs()); });

  m.def("eval_cusp_form", &eval_cusp_form, py::arg("phi"), py::arg("z"));
  m.def("third_antiderivative", &third_antiderivative, py::arg("phi"));
  m.def("eval_series", py::overload_cast<const PeriodicPotential&, Complex, int>(&eval_series),
        py::arg("series"), py::arg("z"), py::arg("derivative_order") = 0);
  m.def("eval_series", py::overload_cast<const DiscTaylorCoeffs&, Complex, int>(&eval_series),
        py::arg("series"), py::arg("z"), py::arg("derivative_order") = 0);

  // beltrami
  py::class_<HarmonicBeltramiUHP>(m, "HarmonicBeltramiUHP")
      .def(py::init<CuspFormCoeffs>(), py::arg("phi"))
      .def_property_readonly("phi", &HarmonicBeltramiUHP::phi)
      .def("sup_norm_bound", &HarmonicBeltramiUHP::sup_norm_bound);
  py::class_<HarmonicBeltramiDisc>(m, "HarmonicBeltramiDisc")
      .def_static("from_betas", [](const std::vector<Complex>& b) { return HarmonicBeltramiDisc::from_betas(b); })
      .def("betas", &HarmonicBeltramiDisc::betas);
  m.def("eval_mu", &eval_mu, py::arg("mu"), py::arg("z"));
  m.def("eval_lambda", &eval_lambda, py::arg("lam"), py::arg("z"));
  m.def("pushdown_covering", &pushdown_covering, py::arg("mu"), py::arg("w"));

  // bers_map
  py::class_<CircleVectorField>(m, "CircleVectorField")
      .def_property_readonly("order", &CircleVectorField::order)
      .def_property_readonly("c0", &CircleVectorField::c0)
      .def("c", &CircleVectorField::c)
      .def("full", &CircleVectorField::full)
      .def("mode_sum", &CircleVectorField::mode_sum);
  py::class_<CurveTangent>(m, "CurveTangent")
      .def_readonly("a", &CurveTangent::a)
      .def_readonly("lambda_", &CurveTangent::lambda)
      .def("betas", &CurveTangent::betas);
  py::class_<MoebiusDisc>(m, "MoebiusDisc").def(py::init<Complex>(), py::arg("w"));
  m.def("moebius_apply", &moebius_apply, py::arg("m"), py::arg("zeta"));
  m.def("d0_P", &d0_P, py::arg("phi"));
  m.def("d0_B", &d0_B, py::arg("phi"));
  m.def("beta_c_consistency", &beta_c_consistency, py::arg("phi"));

  // variation
  m.def("eval_w_dot",
        [](const CuspFormCoeffs& phi, Complex z) { return eval_w_dot(UHPVariationField::from_cusp_form(phi), z); },
        py::arg("phi"), py::arg("z"));
  m.def("dbar_residual_uhp", &dbar_residual_uhp, py::arg("mu"), py::arg("z"), py::arg("h") = kDefaultFdStep);
  m.def("eval_v_dot", &eval_v_dot, py::arg("c"), py::arg("theta"));
  m.def("chain_residual", &chain_residual, py::arg("phi"), py::arg("x"));
  m.def("derive_a1", &derive_a1, py::arg("phi"));
  m.def("moebius_match_residual", &moebius_match_residual, py::arg("phi"), py::arg("points") = 128);

  // boundary maps
  py::enum_<Interpolation>(m, "Interpolation")
      .value("linear", Interpolation::linear)
      .value("cubic", Interpolation::cubic);
  py::class_<SampledCircleMap>(m, "SampledCircleMap")
      .def(py::init([](const std::vector<std::pair<double, double>>& pts) { return SampledCircleMap(to_samples(pts)); }))
      .def_property_readonly("samples", [](const SampledCircleMap& s) { return from_samples(s.samples()); });
  py::class_<SampledLineMap>(m, "SampledLineMap")
      .def(py::init([](const std::vector<std::pair<double, double>>& pts) { return SampledLineMap(to_samples(pts)); }))
      .def_property_readonly("samples", [](const SampledLineMap& s) { return from_samples(s.samples()); })
      .def("__call__", &SampledLineMap::operator(), py::arg("x"), py::arg("mode") = Interpolation::linear);
  m.def("sample_moebius", &sample_moebius, py::arg("m"), py::arg("count"));
  m.def("lift_circle_map", &lift_circle_map, py::arg("eta"));
  m.def("descend_line_map", &descend_line_map, py::arg("u"));
  m.def("group_hom_residual",
        [](const SampledCircleMap& a, const SampledCircleMap& b, int grid) { return group_hom_residual(a, b, grid); },
        py::arg("eta1"), py::arg("eta2"), py::arg("grid"));
  m.def("qs_ratio_estimate",
        [](const SampledCircleMap& eta, const std::vector<std::pair<double, double>>& probes) {
          return qs_ratio_estimate(eta, to_probes(probes));
        },
        py::arg("eta"), py::arg("probes"));

  // metrics
  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init([](double y_max, int nx, int ny) { return QuadratureSpec{y_max, nx, ny}; }),
           py::arg("y_max") = 10.0, py::arg("nx") = 64, py::arg("ny") = 512)
      .def_readwrite("y_max", &QuadratureSpec::y_max)
      .def_readwrite("nx", &QuadratureSpec::nx)
      .def_readwrite("ny", &QuadratureSpec::ny);
  m.def("tz_inner", &tz_inner, py::arg("phi1"), py::arg("phi2"));
  m.def("tz_quadrature",
        [](const CuspFormCoeffs& a, const CuspFormCoeffs& b, const QuadratureSpec& s) {
          const auto r = tz_quadrature(a, b, s);
          return py::make_tuple(r.value, r.tail_bound);
        },
        py::arg("phi1"), py::arg("phi2"), py::arg("spec") = QuadratureSpec{});
  m.def("vk_norm_sq", &vk_norm_sq, py::arg("c"));
  m.def("vk_tz_ratio", &vk_tz_ratio, py::arg("phi"));
  m.def("decay_partial_sums", &decay_partial_sums, py::arg("phi"), py::arg("s"), py::arg("k_max"));
}
