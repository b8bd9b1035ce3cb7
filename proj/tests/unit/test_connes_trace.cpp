#include <cmath>

#include "doctest.h"
#include "qtate/connes_trace.hpp"

using namespace qtate;

namespace {

IsotypicFunction standard(unsigned n = 0) {
  return IsotypicFunction::from_log_profile(AngularMode(n), [](double v) { return cdouble(std::exp(-0.5 * v * v), 0.0); });
}

}  // namespace

TEST_CASE("trace configuration validation") {
  TraceConfig config{standard(), {}, {}};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.lambdas = {2.0, 2.0};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.lambdas = {1.0, 2.0};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.lambdas = {2.0, 4.0};
  CHECK_NOTHROW(config.validate());
  CHECK_THROWS_AS(trace_direct(1.0, standard()), std::invalid_argument);
  CHECK_THROWS_AS(trace_spectral(0.5, standard()), std::invalid_argument);
}

TEST_CASE("trace of the zero function vanishes") {
  const IsotypicFunction zero = IsotypicFunction::zero(AngularMode(0));
  CHECK(std::abs(trace_direct(4.0, zero)) == 0.0);
  CHECK(std::abs(trace_spectral(4.0, zero)) == 0.0);
}

TEST_CASE("direct and spectral traces agree") {
  for (double lambda : {2.0, 4.0}) {
    const cdouble direct = trace_direct(lambda, standard());
    const SpectralTrace parts = trace_spectral_parts(lambda, standard());
    CHECK(std::abs(direct - parts.trace) <= 1e-4 * std::abs(direct));
    CHECK(std::abs(parts.b_at_one + 5.948985929717782) <= 1e-8);
  }
  const cdouble d1 = trace_direct(3.0, standard(1));
  const cdouble s1 = trace_spectral(3.0, standard(1));
  CHECK(std::abs(d1 - s1) <= 1e-4 * std::abs(d1));
}

TEST_CASE("trace is linear in f") {
  const IsotypicFunction f = standard();
  const IsotypicFunction g = IsotypicFunction::from_log_profile(
      AngularMode(0), [](double v) { return cdouble(std::exp(-(v - 1.0) * (v - 1.0)), 0.3 * std::exp(-v * v)); });
  const cdouble c{0.5, -1.5};
  const cdouble lhs = trace_spectral(4.0, c * f + g);
  const cdouble rhs = c * trace_spectral(4.0, f) + trace_spectral(4.0, g);
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
}

TEST_CASE("residual decays and the fit recovers the asymptotic") {
  const TraceConfig config{standard(), {2.0, 4.0, 8.0, 16.0}, {}};
  const auto results = residual_sweep(config);
  REQUIRE(results.size() == 4);
  for (std::size_t i = 1; i < results.size(); ++i) {
    CHECK(std::abs(results[i].residual) < std::abs(results[i - 1].residual));
  }
  const double h = std::abs(results.back().h_at_one);
  CHECK(std::abs(results.back().residual) <= 1e-3 * h);
  for (const auto& r : results) CHECK(std::abs(r.residual - r.residual_direct) <= 1e-6);
  const LinearFit fit = fit_leading_term(results);
  CHECK(std::abs(fit.slope - 1.0) <= 5e-3);
  CHECK(std::abs(fit.intercept - 5.948985929717782) <= 1e-2 * 5.948985929717782);
}
