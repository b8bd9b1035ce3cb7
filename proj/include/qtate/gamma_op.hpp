#pragma once

#include <complex>
#include <functional>
#include <memory>

#include "qtate/angular.hpp"
#include "qtate/quaternion.hpp"
#include "qtate/spectral_line.hpp"

namespace qtate {

/// Central function on the nonzero quaternions in the sector W_N:
/// f(g) = chi_N(g0) K(log|g|), stored through the spectral profile psi of K.
class IsotypicFunction {
 public:
  /// Throws std::invalid_argument if the profile's grid differs from grids.tau or
  /// grids.tau is not symmetric; AliasingError if the grids violate reciprocity.
  IsotypicFunction(AngularMode mode, SpectralProfile psi, SpectralGrids grids = SpectralGrids::defaults());

  static IsotypicFunction from_log_profile(AngularMode mode, const std::function<cdouble(double)>& k,
                                           const SpectralGrids& grids = SpectralGrids::defaults());
  static IsotypicFunction from_spectral_profile(AngularMode mode, const std::function<cdouble(double)>& psi,
                                                const SpectralGrids& grids = SpectralGrids::defaults());
  static IsotypicFunction zero(AngularMode mode, const SpectralGrids& grids = SpectralGrids::defaults());

  AngularMode mode() const { return mode_; }
  const SpectralGrids& grids() const { return grids_; }
  const SpectralProfile& spectral() const { return psi_; }

  /// K on the v-grid.
  LogProfile log_profile() const;
  /// K at an arbitrary v.
  cdouble profile_at(double v) const;
  /// f(1) = (N + 1) K(0).
  cdouble value_at_one() const;
  /// f(g); throws std::domain_error at g = 0.
  cdouble operator()(const Quaternion& g) const;
  /// L^2 norm for the Haar measure d*g (chi_N has unit norm on the unit quaternions).
  double l2_norm() const;
  /// Spectral decay invariant on the tau-grid.
  bool decays(double tol = 1e-12) const { return psi_.decays(tol); }

  IsotypicFunction with_spectral(SpectralProfile psi) const;

 private:
  AngularMode mode_;
  SpectralProfile psi_;
  SpectralGrids grids_;
};

IsotypicFunction operator+(const IsotypicFunction& f, const IsotypicFunction& g);
IsotypicFunction operator-(const IsotypicFunction& f, const IsotypicFunction& g);
IsotypicFunction operator*(cdouble c, const IsotypicFunction& f);

/// max |psi_f - psi_g| / max(1, max |psi_g|); throws std::invalid_argument for
/// different sectors or grids.
double spectral_discrepancy(const IsotypicFunction& f, const IsotypicFunction& g);

/// f(g) -> f(g^{-1}): K(v) -> K(-v), psi(tau) -> psi(-tau).
IsotypicFunction inversion(const IsotypicFunction& f);
/// psi -> gamma_N psi.
IsotypicFunction gamma_transform(const IsotypicFunction& f);
/// psi -> conj(gamma_N) psi.
IsotypicFunction gamma_inverse(const IsotypicFunction& f);
/// Multiplicative image of the additive Fourier transform, F = Gamma o I.
IsotypicFunction fourier_transform(const IsotypicFunction& f);

/// K -> v K (psi -> D psi, D = -i d/dtau), computed on the v side.
IsotypicFunction op_A(const IsotypicFunction& f);
/// psi -> h_N psi - D psi.
IsotypicFunction op_B(const IsotypicFunction& f);
/// psi -> h_N psi.
IsotypicFunction op_H(const IsotypicFunction& f);
/// psi -> k_N psi.
IsotypicFunction op_K(const IsotypicFunction& f);

/// Additive-picture function phi(x) = chi_N(x) K(log|x|) / sqrt(2 pi^2 |x|).
class AdditiveFunction {
 public:
  using Profile = std::function<cdouble(double)>;

  AdditiveFunction(AngularMode mode, Profile log_profile);

  AngularMode mode() const { return mode_; }
  /// K(v).
  cdouble log_profile(double v) const { return k_(v); }
  /// phi(x); throws std::domain_error at x = 0.
  cdouble operator()(const Quaternion& x) const;
  /// phi from Re(x) and n(x) > 0.
  cdouble from_invariants(double re, double norm) const;
  /// The radial factor K(2 log n) / (sqrt(2 pi^2) n) at n = n(x) > 0.
  cdouble radial(double norm) const;

 private:
  AngularMode mode_;
  Profile k_;
};

/// Additive form of f. K is tabulated from the spectral profile at an eighth of the
/// v-grid step and interpolated locally; it is zero outside the v-grid.
AdditiveFunction to_additive(const IsotypicFunction& f);

}  // namespace qtate
