#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "qtate/quaternion.hpp"

namespace qtate {

/// Index N of the Peter-Weyl sector W_N of L^2(SU(2)); the associated
/// irreducible representation Sym^N has dimension N + 1.
class AngularMode {
 public:
  constexpr AngularMode() = default;
  constexpr explicit AngularMode(unsigned n) : n_(n) {}

  constexpr unsigned value() const { return n_; }
  constexpr unsigned dimension() const { return n_ + 1; }
  /// (-1)^N: the action of g0 -> -g0 on the character.
  constexpr int parity() const { return n_ % 2 == 0 ? 1 : -1; }

  friend constexpr bool operator==(AngularMode, AngularMode) = default;

 private:
  unsigned n_ = 0;
};

/// chi_N(theta) = sin((N+1) theta) / sin(theta), extended continuously to
/// theta = 0 (value N+1) and theta = pi (value (-1)^N (N+1)).
double character(AngularMode mode, double theta);

/// Class angle theta in [0, pi] of a nonzero quaternion: cos theta = Re(x) / sqrt(n(x)).
double class_angle(const Quaternion& x);

/// chi_N evaluated on x / |x|^{1/4} (the angular part of a nonzero quaternion).
double character_of(AngularMode mode, const Quaternion& x);

/// Same from the two invariants Re(x) and n(x) > 0.
double character_from_invariants(AngularMode mode, double re, double norm);

/// a^j b^(N-j) for a unit quaternion g0 = a + b j. Throws std::invalid_argument
/// if |n(g0) - 1| > 1e-10 or j > N.
std::complex<double> monomial(AngularMode mode, unsigned j, const Quaternion& g0);

/// Gauss-Legendre rule in the class angle theta in (0, pi), with the Weyl density
/// (2/pi) sin^2(theta) folded into the weights. Integrates class functions
/// against the normalized Haar measure of the unit quaternions.
class AngularQuadrature {
 public:
  explicit AngularQuadrature(std::size_t nodes);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  std::complex<double> integrate(const std::function<std::complex<double>(double)>& class_fn) const;
  /// <chi_N, chi_M> under this rule.
  double character_inner(AngularMode n, AngularMode m) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Integrates a class function with node doubling until two resolutions agree to
/// `tol` (absolute, scaled by max(1, |value|)). Throws ResolutionError when
/// `max_nodes` is reached without agreement.
std::complex<double> integrate_class_function(const std::function<std::complex<double>(double)>& class_fn,
                                              double tol = 1e-13, std::size_t start_nodes = 32,
                                              std::size_t max_nodes = 4096);

/// Oscillatory class integral
///   int_{G0} lambda(rho g0) chi_N(g0) d*g0
///     = (2/pi) int_0^pi exp(-4 pi i rho cos theta) chi_N(theta) sin^2(theta) dtheta,
/// evaluated by node doubling. Real for even N, imaginary for odd N.
std::complex<double> angular_bessel(AngularMode mode, double rho, double tol = 1e-13);

}  // namespace qtate
