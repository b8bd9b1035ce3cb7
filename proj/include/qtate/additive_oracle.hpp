#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "qtate/angular.hpp"
#include "qtate/gamma_op.hpp"
#include "qtate/quaternion.hpp"
#include "qtate/specfun.hpp"

namespace qtate {

using cdouble = std::complex<double>;

/// Cubic grid with M points per axis on [-L, L]^4; M odd so that 0 is a node.
class Grid4D {
 public:
  /// Throws std::invalid_argument unless L > 0 and M is odd and >= 3.
  Grid4D(double half_extent, std::size_t points);

  double half_extent() const { return half_extent_; }
  std::size_t points() const { return points_; }
  double spacing() const { return 2.0 * half_extent_ / static_cast<double>(points_ - 1); }
  std::size_t center() const { return points_ / 2; }
  double coordinate(std::size_t i) const;
  std::size_t size() const { return points_ * points_ * points_ * points_; }
  Quaternion point(std::size_t i0, std::size_t i1, std::size_t i2, std::size_t i3) const;

 private:
  double half_extent_;
  std::size_t points_;
};

/// Complex samples on a Grid4D, axis-major (x0 slowest).
class GridFunction {
 public:
  GridFunction(Grid4D grid, std::vector<cdouble> samples);

  static GridFunction sample(const Grid4D& grid, const std::function<cdouble(const Quaternion&)>& fn);
  /// chi_N(x) R(n(x)) with R evaluated once per distinct norm; `at_zero` is used at the origin.
  static GridFunction sample_central(const Grid4D& grid, AngularMode mode,
                                     const std::function<cdouble(double)>& radial_of_norm, cdouble at_zero);
  static GridFunction sample_additive(const Grid4D& grid, const AdditiveFunction& phi, cdouble at_zero = 0.0);

  const Grid4D& grid() const { return grid_; }
  const std::vector<cdouble>& samples() const { return samples_; }
  cdouble at(std::size_t i0, std::size_t i1, std::size_t i2, std::size_t i3) const;

  /// Largest modulus on the boundary faces.
  double boundary_level() const;
  bool decays(double tol = 1e-8) const { return boundary_level() <= tol; }
  GridFunction conjugated() const;

 private:
  Grid4D grid_;
  std::vector<cdouble> samples_;
};

/// Riemann sum of phi(x) exp(4 pi i Re(x y)) 4 h^4 at each probe y.
std::vector<cdouble> brute_fourier(const GridFunction& phi, const std::vector<Quaternion>& probes);

/// Fourier transform of phi(x) = chi_N(x) R(sqrt(n(x))) at the probes, reduced to
/// (-1)^N / (N+1) 8 pi^2 int_0^r_max R(r) AB_N(r rho) r^3 dr times chi_N(y),
/// rho = sqrt(n(y)), where AB_N is angular_bessel. R must be negligible beyond r_max.
std::vector<cdouble> radial_fourier(AngularMode mode, const std::function<cdouble(double)>& radial, double r_max,
                                    const std::vector<Quaternion>& probes, double tol = 1e-10);

/// A function of x through Re(x) and n(x) only.
using ZonalFunction = std::function<cdouble(double re, double norm)>;

/// y -> phi(a - y) for real a.
ZonalFunction shifted(const ZonalFunction& phi, double a);

/// The additive function as a zonal function (undefined at the origin).
ZonalFunction zonal(const AdditiveFunction& phi);

/// Radial integration window for integrals over the quaternions of zonal functions.
struct RadialWindow {
  /// log r of the innermost shell.
  double log_r_min = -24.0;
  /// The function is negligible beyond this radius.
  double r_max = 8.0;
  double tol = 1e-10;
};

/// Mean of phi over the sphere n(x) = r^2: (2/pi) int_0^pi phi(r cos t, r^2) sin^2 t dt.
cdouble sphere_average(const ZonalFunction& phi, double r, double tol = 1e-12);

/// The Fourier transform of -log|y| paired with phi:
///   int_{|x|<=1} (phi - phi(0)) dx / (2 pi^2 |x|) + int_{|x|>1} phi dx / (2 pi^2 |x|)
///   + (4 log 2 pi + 4 euler_gamma - 2) phi(0).
/// phi(0) is taken as phi(0, 0).
cdouble distribution_G(const ZonalFunction& phi, const RadialWindow& window = {});

/// (phi * G)(a) = G(y -> phi(a - y)).
cdouble g_convolution_at(const ZonalFunction& phi, double a, const RadialWindow& window = {});

/// B(f)(1) from the additive picture: -sqrt(2 pi^2) (phi * G)(1).
cdouble op_B_at_one_via_G(const AdditiveFunction& phi, const RadialWindow& window = {});

/// The homogeneous distribution phi -> int phi(x) |x|^{s-1} dx and its continuation
/// to Re(s) > -1/4.
class HomogeneousDistribution {
 public:
  /// Throws std::domain_error unless Re(s) > -1/4 and s != 0.
  explicit HomogeneousDistribution(cdouble s);

  cdouble s() const { return s_; }
  /// 8 pi^2 [int_0^1 (A(r) - phi(0)) r^{4s-1} dr + int_1^inf A(r) r^{4s-1} dr] + (2 pi^2 / s) phi(0),
  /// A the sphere average; phi(0) is phi(0, 0).
  cdouble operator()(const ZonalFunction& phi, const RadialWindow& window = {}) const;
  /// 8 pi^2 int_0^inf A(r) r^{4s-1} dr; throws std::domain_error unless Re(s) > 0.
  cdouble direct(const ZonalFunction& phi, const RadialWindow& window = {}) const;

 private:
  cdouble s_;
};

/// M(N, s) = 8 pi^2 int_0^inf r^{4s+N-1} e^{-2 pi r^2} dr = 4 pi^2 (2 pi)^{-(2s+N/2)} Gamma(2s + N/2).
cdouble gaussian_moment(AngularMode mode, CriticalStripPoint s);
/// The same integral by trapezoid quadrature in log r.
cdouble gaussian_moment_quadrature(AngularMode mode, CriticalStripPoint s);
/// |i^N M(N, s) - Gamma_N(s) M(N, 1 - s)| / |M(N, s)|.
double functional_equation_residual(AngularMode mode, CriticalStripPoint s);

struct HomogeneityResidual {
  cdouble lhs;
  cdouble rhs;
  double residual;
};

/// Both sides of int H(phi) chi_N |x|^{-s} dx = H_N(s) int phi chi_N |x|^{-s} dx for
/// the additive form phi of f, H(phi) from the spectral route.
HomogeneityResidual homogeneity_check(const IsotypicFunction& f, CriticalStripPoint s);
std::vector<HomogeneityResidual> homogeneity_check(const IsotypicFunction& f,
                                                   const std::vector<CriticalStripPoint>& points);

}  // namespace qtate
