#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qtate {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point rule; the returned reference stays valid for the process lifetime.
const GaussLegendreRule& gauss_legendre(std::size_t n);

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

/// Composite Gauss-Legendre sum over consecutive panels [edges[i], edges[i+1]].
std::complex<double> integrate_panels(const ComplexFn& f, std::span<const double> edges,
                                      std::size_t nodes_per_panel);

/// Halves every panel of a partition.
std::vector<double> refine_panels(std::span<const double> edges);

/// Composite Gauss-Legendre with panel halving until two successive partitions
/// agree to tol * max(1, |value|). Throws ResolutionError after max_halvings.
std::complex<double> integrate_with_doubling(const ComplexFn& f, std::vector<double> edges,
                                             std::size_t nodes_per_panel, double tol, int max_halvings = 6);

/// Nodes and weights of a composite rule, for callers that batch the integrand.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
CompositeRule composite_rule(std::span<const double> edges, std::size_t nodes_per_panel);

/// Richardson extrapolation to h -> 0 of samples taken at h, h/2, h/4, ...,
/// assuming an expansion in integer powers of h. Returns the full triangular
/// table; row k holds the k-times-eliminated estimates.
std::vector<std::vector<double>> richardson_table(std::span<const double> samples);

}  // namespace qtate
