#include "qtate/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtate/errors.hpp"
#include "qtate/quadrature.hpp"

namespace qtate {

namespace {
constexpr double kPi = std::numbers::pi;
}

double character(AngularMode mode, double theta) {
  const double n1 = static_cast<double>(mode.dimension());
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-7) {
    // second-order expansion about the nearest endpoint
    const bool near_pi = theta > 0.5 * kPi;
    const double d = near_pi ? kPi - theta : theta;
    const double value = n1 * (1.0 - (n1 * n1 - 1.0) * d * d / 6.0);
    return near_pi ? mode.parity() * value : value;
  }
  return std::sin(n1 * theta) / s;
}

double class_angle(const Quaternion& x) {
  const double n = reduced_norm(x);
  if (n == 0.0) throw std::domain_error("class_angle: zero quaternion");
  return std::acos(std::clamp(x.x0 / std::sqrt(n), -1.0, 1.0));
}

double character_from_invariants(AngularMode mode, double re, double norm) {
  if (!(norm > 0.0)) throw std::domain_error("character_from_invariants: norm must be positive");
  return character(mode, std::acos(std::clamp(re / std::sqrt(norm), -1.0, 1.0)));
}

double character_of(AngularMode mode, const Quaternion& x) { return character(mode, class_angle(x)); }

std::complex<double> monomial(AngularMode mode, unsigned j, const Quaternion& g0) {
  if (std::abs(reduced_norm(g0) - 1.0) > 1e-10) {
    throw std::invalid_argument("monomial: argument is not a unit quaternion");
  }
  if (j > mode.value()) throw std::invalid_argument("monomial: exponent j exceeds N");
  return std::pow(g0.a(), static_cast<int>(j)) * std::pow(g0.b(), static_cast<int>(mode.value() - j));
}

AngularQuadrature::AngularQuadrature(std::size_t nodes) {
  const auto& rule = gauss_legendre(nodes);
  nodes_.resize(nodes);
  weights_.resize(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double theta = 0.5 * kPi * (rule.nodes[i] + 1.0);
    const double s = std::sin(theta);
    nodes_[i] = theta;
    weights_[i] = 0.5 * kPi * rule.weights[i] * (2.0 / kPi) * s * s;
  }
}

std::complex<double> AngularQuadrature::integrate(
    const std::function<std::complex<double>(double)>& class_fn) const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * class_fn(nodes_[i]);
  return sum;
}

double AngularQuadrature::character_inner(AngularMode n, AngularMode m) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    sum += weights_[i] * character(n, nodes_[i]) * character(m, nodes_[i]);
  }
  return sum;
}

std::complex<double> integrate_class_function(const std::function<std::complex<double>(double)>& class_fn,
                                              double tol, std::size_t start_nodes, std::size_t max_nodes) {
  std::size_t n = start_nodes;
  std::complex<double> prev = AngularQuadrature(n).integrate(class_fn);
  while (n < max_nodes) {
    n *= 2;
    const std::complex<double> cur = AngularQuadrature(n).integrate(class_fn);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ResolutionError("angular quadrature did not resolve at " + std::to_string(max_nodes) + " nodes");
}

std::complex<double> angular_bessel(AngularMode mode, double rho, double tol) {
  if (rho < 0.0) throw std::invalid_argument("angular_bessel: rho must be nonnegative");
  // The integrand has about 4 rho oscillations over (0, pi); start above that.
  std::size_t start = 32;
  while (static_cast<double>(start) < 8.0 * rho + 16.0) start *= 2;
  const double omega = 4.0 * kPi * rho;
  auto integrand = [&](double theta) {
    const double phase = -omega * std::cos(theta);
    return std::complex<double>(std::cos(phase), std::sin(phase)) * character(mode, theta);
  };
  return integrate_class_function(integrand, tol, start, std::max<std::size_t>(4096, 8 * start));
}

}  // namespace qtate
