#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qtate/gamma_op.hpp"

namespace qtate {

using cdouble = std::complex<double>;

struct TraceOptions {
  /// Relative agreement required between two radial resolutions.
  double tol = 1e-10;
  std::size_t radial_nodes = 20;
  /// Depth below the cutoff v = -2 log(Lambda) covered by the remainder integral.
  double remainder_depth = 80.0;
};

struct TraceConfig {
  IsotypicFunction f;
  std::vector<double> lambdas;
  TraceOptions options;

  /// Throws std::invalid_argument unless lambdas is nonempty, strictly increasing and > 1.
  void validate() const;
};

struct TraceResult {
  double lambda = 0.0;
  cdouble trace_direct;
  cdouble trace_spectral;
  /// 2 log(Lambda) f(1)
  cdouble leading;
  /// H(f)(1)
  cdouble h_at_one;
  /// Tr - 2 log(Lambda) f(1) + H(f)(1), from the spectral route.
  cdouble residual;
  /// The same quantity from the direct route.
  cdouble residual_direct;
};

/// sqrt(2 pi^2) int_{|Y| <= Lambda^2} (2 log Lambda - log|Y|) lambda(Y) Gamma(f)_a(Y) dY
/// in polar form: 8 pi^2 int_0^sqrt(Lambda) (2 log Lambda - 4 log r) K_Gamma(4 log r) r AB_N(r) dr.
/// Throws std::invalid_argument for Lambda <= 1, ResolutionError if the radial
/// quadrature does not settle.
cdouble trace_direct(double lambda, const IsotypicFunction& f, const TraceOptions& options = {});

struct SpectralTrace {
  cdouble trace;
  /// B(I(f))(1)
  cdouble b_at_one;
  /// Contribution of the truncation below v = -2 log(Lambda).
  cdouble remainder;
};

/// (2 log Lambda - B)_+ (I(f))(1) through B = -Gamma A Gamma^{-1}: the weight
/// (2 log Lambda + v)_+ on the log side of Gamma^{-1} I(f), split as
/// (2 log Lambda + v) + (-2 log Lambda - v)_+.
SpectralTrace trace_spectral_parts(double lambda, const IsotypicFunction& f, const TraceOptions& options = {});
cdouble trace_spectral(double lambda, const IsotypicFunction& f, const TraceOptions& options = {});

/// Both routes over the Lambda list, evaluated in parallel.
std::vector<TraceResult> residual_sweep(const TraceConfig& config);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares fit of Re Tr_spectral against 2 log(Lambda).
LinearFit fit_leading_term(const std::vector<TraceResult>& results);

}  // namespace qtate
