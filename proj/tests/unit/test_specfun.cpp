#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qtate/errors.hpp"
#include "qtate/specfun.hpp"

using namespace qtate;
using qtate::testing::stirling_log_gamma;

namespace {
const double kPi = std::numbers::pi;
const double kLog2Pi = std::log(2.0 * kPi);
}  // namespace

TEST_CASE("log_gamma matches the Stirling oracle") {
  for (double re : {0.01, 0.3, 0.5, 0.999, 1.0, 1.02, 1.5, 2.0, 2.3, 3.7, 11.0, 40.0}) {
    for (double im : {-120.0, -8.0, -1.0, 0.0, 0.25, 1.0, 3.0, 30.0, 200.0}) {
      const cdouble z{re, im};
      const cdouble expected = stirling_log_gamma(z);
      CHECK(std::abs(log_gamma(z) - expected) <= 1e-13 * std::max(1.0, std::abs(expected)));
    }
  }
  CHECK(std::abs(log_gamma({0.5, 0.0}) - 0.5 * std::log(kPi)) < 1e-15);
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-16);
  CHECK(std::abs(log_gamma({2.0, 0.0})) < 1e-16);
  CHECK(std::abs(log_gamma({5.0, 0.0}) - std::log(24.0)) < 1e-14);
}

TEST_CASE("log_gamma is the principal branch and conjugate symmetric") {
  // continuous in Im z starting from the real axis: steps follow d/dy Im log_gamma = Re digamma
  cdouble prev = log_gamma({1.5, 0.0});
  for (int k = 1; k <= 400; ++k) {
    const cdouble cur = log_gamma({1.5, 0.5 * k});
    const double slope = digamma({1.5, 0.5 * k - 0.25}).real();
    CHECK(std::abs(cur.imag() - prev.imag() - 0.5 * slope) < 0.05);
    prev = cur;
  }
  for (double im : {0.3, 7.0, 90.0}) {
    const cdouble a = log_gamma({0.8, im});
    const cdouble b = log_gamma({0.8, -im});
    CHECK(std::abs(a - std::conj(b)) < 1e-13);
  }
}

TEST_CASE("special functions reject the left half-plane") {
  CHECK_THROWS_AS(log_gamma({0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(log_gamma({-1.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(digamma({0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(trigamma({-0.1, 2.0}), std::domain_error);
}

TEST_CASE("digamma and trigamma") {
  CHECK(std::abs(digamma({1.0, 0.0}) + std::numbers::egamma) < 1e-15);
  CHECK(std::abs(digamma({0.5, 0.0}) + std::numbers::egamma + 2.0 * std::log(2.0)) < 1e-14);
  CHECK(std::abs(trigamma({1.0, 0.0}) - kPi * kPi / 6.0) < 1e-14);
  CHECK(std::abs(trigamma({0.5, 0.0}) - kPi * kPi / 2.0) < 1e-13);
  // derivative oracles: central differences of the independent Stirling log-gamma
  const double h = 1e-3;
  auto derivative = [h](auto&& fn, cdouble z) {
    return (8.0 * (fn(z + h) - fn(z - h)) - (fn(z + 2.0 * h) - fn(z - 2.0 * h))) / (12.0 * h);
  };
  for (const cdouble z : {cdouble(0.7, 0.0), cdouble(1.5, 2.0), cdouble(3.0, -10.0), cdouble(1.0, 40.0)}) {
    const cdouble d1 = derivative([](cdouble w) { return stirling_log_gamma(w); }, z);
    CHECK(std::abs(digamma(z) - d1) < 1e-9);
    const cdouble d2 = derivative([](cdouble w) { return digamma(w); }, z);
    CHECK(std::abs(trigamma(z) - d2) < 1e-9);
  }
}

TEST_CASE("critical strip points") {
  CHECK_NOTHROW(CriticalStripPoint({0.5, 3.0}));
  CHECK_THROWS_AS(CriticalStripPoint({0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(CriticalStripPoint({1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(CriticalStripPoint({1.2, 0.0}), std::domain_error);
  CHECK(CriticalStripPoint({0.25, 2.0}).reflected().value() == cdouble(0.75, -2.0));
}

TEST_CASE("Gamma_N closed form") {
  // Gamma_0(1/2) = 1
  CHECK(std::abs(gamma_N(AngularMode(0), CriticalStripPoint({0.5, 0.0})) - 1.0) < 1e-15);
  // direct quotient of Gamma values for moderate arguments
  for (unsigned n = 0; n <= 4; ++n) {
    const cdouble s{0.3, 0.4};
    const cdouble direct = std::pow(cdouble(0.0, 1.0), static_cast<double>(n)) *
                           std::pow(2.0 * kPi, 2.0 - 4.0 * s) *
                           std::exp(stirling_log_gamma(2.0 * s + 0.5 * n) -
                                    stirling_log_gamma(2.0 * (1.0 - s) + 0.5 * n));
    CHECK(std::abs(gamma_N(AngularMode(n), CriticalStripPoint(s)) - direct) < 1e-12 * std::abs(direct));
  }
  // Gamma_N(s) Gamma_N(1 - s) = (-1)^N
  for (unsigned n = 0; n <= 6; ++n) {
    const CriticalStripPoint s({0.2, 1.3});
    const cdouble prod = gamma_N(AngularMode(n), s) * gamma_N(AngularMode(n), s.reflected());
    CHECK(std::abs(prod - static_cast<double>(AngularMode(n).parity())) < 1e-12);
  }
}

TEST_CASE("gamma_N(tau) is unimodular with gamma(tau) gamma(-tau) = (-1)^N") {
  double worst_modulus = 0.0;
  double worst_reflection = 0.0;
  for (unsigned n = 0; n <= 10; ++n) {
    for (int k = -5000; k <= 5000; k += 7) {
      const double tau = 0.01 * k;
      const cdouble g = gamma_multiplier(AngularMode(n), tau);
      worst_modulus = std::max(worst_modulus, std::abs(std::abs(g) - 1.0));
      const cdouble r = g * gamma_multiplier(AngularMode(n), -tau);
      worst_reflection = std::max(worst_reflection, std::abs(r - static_cast<double>(AngularMode(n).parity())));
    }
  }
  CHECK(worst_modulus <= 1e-10);
  CHECK(worst_reflection <= 1e-10);
  // agreement with Gamma_N on the critical line
  for (double tau : {-3.0, 0.0, 0.7, 12.0}) {
    CHECK(std::abs(gamma_multiplier(AngularMode(3), tau) -
                   gamma_N(AngularMode(3), CriticalStripPoint::on_critical_line(tau))) < 1e-12);
  }
}

TEST_CASE("h_N and k_N against finite differences") {
  const double d = 1e-4;
  double worst_h = 0.0;
  double worst_k = 0.0;
  for (unsigned n = 0; n <= 5; ++n) {
    const AngularMode mode(n);
    for (double tau = -20.0; tau <= 20.0; tau += 0.37) {
      // -i d/dtau log gamma = d/dtau arg gamma
      const double arg_diff =
          std::arg(gamma_multiplier(mode, tau + d) / gamma_multiplier(mode, tau - d)) / (2.0 * d);
      worst_h = std::max(worst_h, std::abs(h_N(mode, tau) - arg_diff));
      const double h_diff = -(h_N(mode, tau + d) - h_N(mode, tau - d)) / (2.0 * d);
      worst_k = std::max(worst_k, std::abs(k_N(mode, tau) - h_diff));
    }
  }
  CHECK(worst_h <= 1e-6);
  CHECK(worst_k <= 1e-6);
}

TEST_CASE("h_N is the critical-line restriction of H_N") {
  for (unsigned n : {0u, 1u, 4u}) {
    for (double tau : {0.0, 0.5, 3.0}) {
      const cdouble big = H_N(AngularMode(n), CriticalStripPoint::on_critical_line(tau));
      CHECK(std::abs(big - h_N(AngularMode(n), tau)) < 1e-13);
    }
  }
}

TEST_CASE("spectral function values and symmetries") {
  CHECK(h_N(AngularMode(0), 0.0) == doctest::Approx(-9.6603709252).epsilon(1e-11));
  CHECK(h_N(AngularMode(0), 0.0) == doctest::Approx(-4.0 * kLog2Pi - 4.0 * std::numbers::egamma).epsilon(1e-14));
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(std::abs(k_N(AngularMode(n), 0.0)) < 1e-15);
    CHECK(h_N(AngularMode(n), 2.5) == doctest::Approx(h_N(AngularMode(n), -2.5)).epsilon(1e-15));
    CHECK(k_N(AngularMode(n), 2.5) == doctest::Approx(-k_N(AngularMode(n), -2.5)).epsilon(1e-15));
  }
}

TEST_CASE("left-boundedness and boundedness scan") {
  double min_h = 1e300;
  unsigned min_n = 99;
  double min_tau = 99.0;
  for (unsigned n = 0; n <= 20; ++n) {
    for (int k = -1000; k <= 1000; ++k) {
      const double tau = 0.1 * k;
      const double h = h_N(AngularMode(n), tau);
      if (h < min_h) {
        min_h = h;
        min_n = n;
        min_tau = tau;
      }
    }
  }
  CHECK(min_n == 0);
  CHECK(min_tau == 0.0);
  CHECK(std::abs(min_h - h_N(AngularMode(0), 0.0)) <= 1e-9);
  for (double tau : {0.5, 1.0, 2.0}) {
    const double sup0 = std::abs(k_N(AngularMode(0), tau));
    for (unsigned n = 1; n <= 20; ++n) CHECK(std::abs(k_N(AngularMode(n), tau)) <= sup0);
  }
}

TEST_CASE("epsilon expansion of Gamma_0 near 1") {
  const double constant = 4.0 * kLog2Pi + 4.0 * std::numbers::egamma - 2.0;
  CHECK(g_distribution_constant() == doctest::Approx(7.6603709252).epsilon(1e-11));
  const Gamma0Expansion e2 = gamma0_expansion(2);
  REQUIRE(e2.coefficients.size() == 2);
  CHECK(std::abs(e2.coefficients[0] - 1.0) <= 1e-8);
  CHECK(std::abs(e2.coefficients[1] - constant) <= 1e-6);
  CHECK(std::abs(e2.coefficients[1] - (-h_N(AngularMode(0), 0.0) - 2.0)) <= 1e-10);
  const Gamma0Expansion e3 = gamma0_expansion(3);
  REQUIRE(e3.coefficients.size() == 3);
  // c3 = l2 + l1^2 / 2 for l(eps) = log(2 pi^2 Gamma_0(1 - eps) / eps), l2 = 2 psi'(2) - 2 psi'(1)
  const double l1 = 4.0 * kLog2Pi + 4.0 * std::numbers::egamma - 2.0;
  const double l2 = 2.0 * trigamma({2.0, 0.0}).real() - 2.0 * trigamma({1.0, 0.0}).real();
  CHECK(e3.coefficients[2] == doctest::Approx(l2 + 0.5 * l1 * l1).epsilon(1e-7));
  CHECK_THROWS_AS(gamma0_expansion(1), std::invalid_argument);
  CHECK_THROWS_AS(gamma0_expansion(4), std::invalid_argument);
  CHECK_THROWS_AS(gamma0_expansion(2, 1e-6, 2), ConvergenceError);
}

TEST_CASE("spectral function table") {
  const UniformGrid tau = UniformGrid::centered(10.0, 0.125);
  const SpectralFunctionTable table = SpectralFunctionTable::build(AngularMode(2), tau);
  CHECK(table.gamma.size() == tau.count);
  CHECK(table.max_invariant_violation() <= 1e-12);
  CHECK(table.h[80] == doctest::Approx(h_N(AngularMode(2), 0.0)));
}
