#pragma once

#include <complex>
#include <vector>

#include "qtate/angular.hpp"
#include "qtate/grid.hpp"

namespace qtate {

using cdouble = std::complex<double>;

/// A point of the open critical strip 0 < Re(s) < 1.
class CriticalStripPoint {
 public:
  /// Throws std::domain_error outside the open strip.
  explicit CriticalStripPoint(cdouble s);
  static CriticalStripPoint on_critical_line(double tau) { return CriticalStripPoint({0.5, tau}); }

  cdouble value() const { return s_; }
  /// The reflected point 1 - s.
  CriticalStripPoint reflected() const { return CriticalStripPoint(1.0 - s_); }

 private:
  cdouble s_;
};

/// i^n, exact.
cdouble i_power(unsigned n);

// ---- classical special functions, Re(z) > 0 -----------------------------------------

/// Principal branch of log Gamma(z), Lanczos (g = 7, 9 terms). Throws
/// std::domain_error for Re(z) <= 0.
cdouble log_gamma(cdouble z);
/// psi(z) = Gamma'(z)/Gamma(z). Throws std::domain_error for Re(z) <= 0.
cdouble digamma(cdouble z);
/// psi'(z). Throws std::domain_error for Re(z) <= 0.
cdouble trigamma(cdouble z);

// ---- quaternionic Tate Gamma functions and their logarithmic derivatives -------------

/// Gamma_N(s) = i^N (2 pi)^(2 - 4s) Gamma(2s + N/2) / Gamma(2(1-s) + N/2),
/// computed as an exponentiated log-gamma difference.
cdouble gamma_N(AngularMode mode, CriticalStripPoint s);

/// gamma_N(tau) = Gamma_N(1/2 + i tau): the spectral multiplier of the Gamma
/// operator on the sector W_N. Unimodular by construction.
cdouble gamma_multiplier(AngularMode mode, double tau);

/// H_N(s) = d/ds log Gamma_N(s) = -4 log(2 pi) + 2 psi(2s + N/2) + 2 psi(2(1-s) + N/2).
cdouble H_N(AngularMode mode, CriticalStripPoint s);

/// h_N(tau) = -i gamma_N'(tau) / gamma_N(tau) = -4 log(2 pi) + 4 Re psi(1 + N/2 + 2 i tau).
double h_N(AngularMode mode, double tau);

/// k_N(tau) = -h_N'(tau) = 8 Im psi'(1 + N/2 + 2 i tau).
double k_N(AngularMode mode, double tau);

/// 4 log(2 pi) + 4 euler_gamma - 2, the point-mass coefficient of the Fourier
/// transform of -log|y|.
double g_distribution_constant();

/// Taylor coefficients of eps -> 2 pi^2 Gamma_0(1 - eps) about eps = 0,
/// extracted by Richardson extrapolation of log(2 pi^2 Gamma_0(1 - eps) / eps)
/// sampled at eps = 1e-2 / 2^k, k < levels.
struct Gamma0Expansion {
  /// coefficients[k] multiplies eps^(k+1); coefficients[0] is 1 and
  /// coefficients[1] is g_distribution_constant().
  std::vector<double> coefficients;
  /// Error estimate per coefficient, propagated from the gap between the last two
  /// diagonal entries of each Richardson table.
  std::vector<double> convergence;
};

/// order in {2, 3}; levels >= 2 samples. Throws std::invalid_argument for a bad
/// order and ConvergenceError when a coefficient's error estimate exceeds tol.
Gamma0Expansion gamma0_expansion(int order, double tol = 1e-6, int levels = 6);

/// gamma_N, h_N, k_N sampled on a tau grid.
struct SpectralFunctionTable {
  AngularMode mode;
  UniformGrid tau;
  std::vector<cdouble> gamma;
  std::vector<double> h;
  std::vector<double> k;

  static SpectralFunctionTable build(AngularMode mode, const UniformGrid& tau);

  /// Largest deviation from the table invariants: ||gamma| - 1|, |h(tau) - h(-tau)|,
  /// |k(tau) + k(-tau)| (the symmetry terms need a symmetric grid).
  double max_invariant_violation() const;
};

}  // namespace qtate
