#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qtate/grid.hpp"

namespace qtate {

using cdouble = std::complex<double>;

/// Paired sampling windows for the log side (v = log|g|) and the spectral side (tau).
struct SpectralGrids {
  UniformGrid v;
  UniformGrid tau;

  /// v in [-48, 48] step 1/32, tau in [-64, 64] step 1/64.
  static SpectralGrids defaults();

  /// Throws AliasingError if tau.step * V > pi/4 or v.step * T > pi.
  void check_reciprocity() const;

  friend bool operator==(const SpectralGrids&, const SpectralGrids&) = default;
};

/// Samples of a radial log-profile K(v) on a uniform v-grid.
struct LogProfile {
  UniformGrid grid;
  std::vector<cdouble> samples;

  static LogProfile sample(const UniformGrid& grid, const std::function<cdouble(double)>& k);

  /// max |K| over the two end samples relative to max(1, max |K|).
  double boundary_level() const;
  /// boundary_level() <= tol.
  bool decays(double tol = 1e-12) const;
};

/// Samples of psi(tau) on a uniform tau-grid.
struct SpectralProfile {
  UniformGrid grid;
  std::vector<cdouble> samples;

  static SpectralProfile sample(const UniformGrid& grid, const std::function<cdouble(double)>& psi);

  double boundary_level() const;
  bool decays(double tol = 1e-12) const;
};

/// psi(tau) = int K(v) e^{i tau v} dv (trapezoid on the v-grid) on `tau`.
SpectralProfile to_spectral(const LogProfile& k, const UniformGrid& tau);

/// K(v) = (1/2 pi) int psi(tau) e^{-i tau v} dtau (trapezoid on the tau-grid) on `v`.
LogProfile from_spectral(const SpectralProfile& psi, const UniformGrid& v);

/// from_spectral at a single arbitrary v.
cdouble profile_at(const SpectralProfile& psi, double v);

/// from_spectral at several points, evaluated in parallel.
std::vector<cdouble> profile_at(const SpectralProfile& psi, const std::vector<double>& v);

/// Pointwise m(tau) * psi(tau).
SpectralProfile apply_multiplier(const SpectralProfile& psi, const std::function<cdouble(double)>& m);

/// Pointwise product with precomputed multiplier samples on the same grid.
SpectralProfile apply_multiplier(const SpectralProfile& psi, const std::vector<cdouble>& m);

/// (1/2 pi) int psi(tau) dtau, i.e. K(0).
cdouble evaluate_at_one(const SpectralProfile& psi);

/// Trapezoid sums of |K|^2 dv and (1/2 pi) |psi|^2 dtau.
double l2_norm_squared(const LogProfile& k);
double l2_norm_squared(const SpectralProfile& psi);

/// Trapezoid weights step * (1/2 at the ends, 1 inside).
std::vector<double> trapezoid_weights(const UniformGrid& grid);

}  // namespace qtate
