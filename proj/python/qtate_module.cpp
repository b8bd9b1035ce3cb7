#include <cmath>
#include <stdexcept>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtate/additive_oracle.hpp"
#include "qtate/connes_trace.hpp"
#include "qtate/errors.hpp"
#include "qtate/gamma_op.hpp"
#include "qtate/specfun.hpp"

namespace py = pybind11;
using namespace qtate;

namespace {

Quaternion to_quaternion(const std::vector<double>& x) {
  if (x.size() != 4) throw std::invalid_argument("a quaternion is a sequence of 4 floats");
  return {x[0], x[1], x[2], x[3]};
}

CriticalStripPoint strip(cdouble s) { return CriticalStripPoint(s); }

// Python callables are sampled on the v-grid here, with the GIL held, so the
// library never calls back into the interpreter from a worker thread.
IsotypicFunction from_callable(unsigned n, const std::function<cdouble(double)>& k) {
  const SpectralGrids grids = SpectralGrids::defaults();
  const auto v = grids.v.points();
  std::vector<cdouble> samples;
  samples.reserve(v.size());
  for (double x : v) samples.push_back(k(x));
  const UniformGrid grid = grids.v;
  return IsotypicFunction::from_log_profile(AngularMode(n), [grid, samples](double x) {
    const double pos = (x - grid.start) / grid.step;
    const long long i = std::llround(pos);
    if (i < 0 || i >= static_cast<long long>(samples.size()) || std::abs(pos - static_cast<double>(i)) > 1e-9) {
      throw std::out_of_range("log profile requested off the sampling grid");
    }
    return samples[static_cast<std::size_t>(i)];
  });
}

IsotypicFunction gaussian(unsigned n, double center, double width, cdouble amplitude) {
  if (!(width > 0.0)) throw std::invalid_argument("width must be positive");
  return IsotypicFunction::from_log_profile(AngularMode(n), [=](double v) {
    const double x = (v - center) / width;
    return amplitude * std::exp(-0.5 * x * x);
  });
}

py::dict trace_row(const TraceResult& r) {
  py::dict d;
  d["lambda"] = r.lambda;
  d["trace_direct"] = r.trace_direct;
  d["trace_spectral"] = r.trace_spectral;
  d["leading"] = r.leading;
  d["h_at_one"] = r.h_at_one;
  d["residual"] = r.residual;
  d["residual_direct"] = r.residual_direct;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qtate, m) {
  m.doc() = "Quaternionic Tate Gamma functions, conductor operator and truncated trace.";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("digamma", &digamma, py::arg("z"));
  m.def("trigamma", &trigamma, py::arg("z"));
  m.def("gamma_N", [](unsigned n, cdouble s) { return gamma_N(AngularMode(n), strip(s)); }, py::arg("n"),
        py::arg("s"));
  m.def("gamma_multiplier", [](unsigned n, double tau) { return gamma_multiplier(AngularMode(n), tau); },
        py::arg("n"), py::arg("tau"));
  m.def("H_N", [](unsigned n, cdouble s) { return H_N(AngularMode(n), strip(s)); }, py::arg("n"), py::arg("s"));
  m.def("h_N", [](unsigned n, double tau) { return h_N(AngularMode(n), tau); }, py::arg("n"), py::arg("tau"));
  m.def("k_N", [](unsigned n, double tau) { return k_N(AngularMode(n), tau); }, py::arg("n"), py::arg("tau"));
  m.def("g_distribution_constant", &g_distribution_constant);
  m.def(
      "gamma0_expansion",
      [](int order, double tol, int levels) {
        const Gamma0Expansion e = gamma0_expansion(order, tol, levels);
        return py::make_tuple(e.coefficients, e.convergence);
      },
      py::arg("order") = 2, py::arg("tol") = 1e-6, py::arg("levels") = 6,
      "Taylor coefficients of eps -> 2 pi^2 Gamma_0(1 - eps) and their error estimates.");

  m.def("gaussian_moment", [](unsigned n, cdouble s) { return gaussian_moment(AngularMode(n), strip(s)); },
        py::arg("n"), py::arg("s"));
  m.def("gaussian_moment_quadrature",
        [](unsigned n, cdouble s) { return gaussian_moment_quadrature(AngularMode(n), strip(s)); }, py::arg("n"),
        py::arg("s"));
  m.def("functional_equation_residual",
        [](unsigned n, cdouble s) { return functional_equation_residual(AngularMode(n), strip(s)); }, py::arg("n"),
        py::arg("s"));

  py::class_<IsotypicFunction>(m, "IsotypicFunction")
      .def_static("from_log_profile", &from_callable, py::arg("n"), py::arg("k"),
                  "f(g) = chi_N(g0) K(log|g|) with K sampled from a Python callable.")
      .def_static("gaussian", &gaussian, py::arg("n"), py::arg("center") = 0.0, py::arg("width") = 1.0,
                  py::arg("amplitude") = cdouble(1.0, 0.0))
      .def_static("zero", [](unsigned n) { return IsotypicFunction::zero(AngularMode(n)); }, py::arg("n"))
      .def_property_readonly("n", [](const IsotypicFunction& f) { return f.mode().value(); })
      .def("profile_at", &IsotypicFunction::profile_at, py::arg("v"))
      .def("value_at_one", &IsotypicFunction::value_at_one)
      .def("__call__", [](const IsotypicFunction& f, const std::vector<double>& g) { return f(to_quaternion(g)); })
      .def("l2_norm", &IsotypicFunction::l2_norm)
      .def("decays", &IsotypicFunction::decays, py::arg("tol") = 1e-12)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__", [](const IsotypicFunction& f, cdouble c) { return c * f; })
      .def("__mul__", [](const IsotypicFunction& f, cdouble c) { return c * f; });

  m.def("spectral_discrepancy", &spectral_discrepancy);
  m.def("inversion", &inversion);
  m.def("gamma_transform", &gamma_transform);
  m.def("gamma_inverse", &gamma_inverse);
  m.def("fourier_transform", &fourier_transform);
  m.def("op_A", &op_A);
  m.def("op_B", &op_B);
  m.def("op_H", &op_H);
  m.def("op_K", &op_K);

  m.def("trace_direct", [](double lambda, const IsotypicFunction& f) { return trace_direct(lambda, f); },
        py::arg("lam"), py::arg("f"));
  m.def("trace_spectral", [](double lambda, const IsotypicFunction& f) { return trace_spectral(lambda, f); },
        py::arg("lam"), py::arg("f"));
  m.def(
      "residual_sweep",
      [](const IsotypicFunction& f, const std::vector<double>& lambdas) {
        TraceConfig config{f, lambdas, {}};
        config.validate();
        std::vector<TraceResult> results;
        {
          py::gil_scoped_release release;
          results = residual_sweep(config);
        }
        py::list out;
        for (const auto& r : results) out.append(trace_row(r));
        return out;
      },
      py::arg("f"), py::arg("lambdas"));
  m.def(
      "fit_leading_term",
      [](const IsotypicFunction& f, const std::vector<double>& lambdas) {
        TraceConfig config{f, lambdas, {}};
        config.validate();
        const LinearFit fit = fit_leading_term(residual_sweep(config));
        return py::make_tuple(fit.slope, fit.intercept);
      },
      py::arg("f"), py::arg("lambdas"), "Slope and intercept of Re Tr against 2 log(Lambda).");

  m.def(
      "op_B_at_one_via_G",
      [](const IsotypicFunction& f) { return op_B_at_one_via_G(to_additive(f)); }, py::arg("f"),
      "B(f)(1) through the distribution G in the additive picture.");
  m.def(
      "homogeneity_residual",
      [](const IsotypicFunction& f, cdouble s) { return homogeneity_check(f, strip(s)).residual; }, py::arg("f"),
      py::arg("s"));
  m.def(
      "self_dual_error",
      [](double half_extent, std::size_t points, const std::vector<std::vector<double>>& probes) {
        const auto omega = [](const Quaternion& x) { return cdouble(std::exp(-2.0 * M_PI * reduced_norm(x)), 0.0); };
        std::vector<Quaternion> ys;
        for (const auto& p : probes) ys.push_back(to_quaternion(p));
        const auto values = brute_fourier(GridFunction::sample(Grid4D(half_extent, points), omega), ys);
        double diff = 0.0, ref = 0.0;
        for (std::size_t i = 0; i < ys.size(); ++i) {
          diff = std::max(diff, std::abs(values[i] - omega(ys[i])));
          ref = std::max(ref, std::abs(omega(ys[i])));
        }
        return diff / ref;
      },
      py::arg("half_extent"), py::arg("points"), py::arg("probes"),
      "Relative error of the brute-force transform of exp(-2 pi n(x)) against itself.");
}
