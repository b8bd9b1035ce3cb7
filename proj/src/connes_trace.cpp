#include "qtate/connes_trace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qtate/angular.hpp"
#include "qtate/errors.hpp"
#include "qtate/parallel.hpp"
#include "qtate/quadrature.hpp"
#include "qtate/spectral_line.hpp"

namespace qtate {

namespace {

constexpr double kPi = std::numbers::pi;

void require_lambda(double lambda) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) throw std::invalid_argument("Lambda must be a finite value > 1");
}

// Geometric panels toward r = 0, then width 1/16 up to sqrt(Lambda).
std::vector<double> radial_edges(double r_end) {
  std::vector<double> edges{0.0};
  const double knee = std::min(0.25, r_end);
  for (int k = 30; k >= 1; --k) edges.push_back(std::ldexp(knee, -k));
  const auto panels = static_cast<std::size_t>(std::ceil((r_end - knee) * 16.0));
  edges.push_back(knee);
  for (std::size_t i = 1; i <= panels; ++i) {
    edges.push_back(knee + (r_end - knee) * static_cast<double>(i) / static_cast<double>(panels));
  }
  return edges;
}

}  // namespace

void TraceConfig::validate() const {
  if (lambdas.empty()) throw std::invalid_argument("TraceConfig: empty Lambda list");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    require_lambda(lambdas[i]);
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) {
      throw std::invalid_argument("TraceConfig: Lambda list must be strictly increasing");
    }
  }
}

cdouble trace_direct(double lambda, const IsotypicFunction& f, const TraceOptions& options) {
  require_lambda(lambda);
  const SpectralProfile psi_gamma = gamma_transform(f).spectral();
  const AngularMode mode = f.mode();
  const double two_log = 2.0 * std::log(lambda);
  auto evaluate = [&](const std::vector<double>& edges) {
    const CompositeRule rule = composite_rule(edges, options.radial_nodes);
    std::vector<double> v(rule.nodes.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 4.0 * std::log(rule.nodes[i]);
    const std::vector<cdouble> k = profile_at(psi_gamma, v);
    std::vector<cdouble> terms(v.size());
    parallel_for(v.size(), [&](std::size_t i) {
      const double r = rule.nodes[i];
      terms[i] = rule.weights[i] * (two_log - v[i]) * k[i] * r * angular_bessel(mode, r);
    });
    cdouble sum{0.0, 0.0};
    for (const auto& t : terms) sum += t;
    return 8.0 * kPi * kPi * sum;
  };
  std::vector<double> edges = radial_edges(std::sqrt(lambda));
  cdouble prev = evaluate(edges);
  for (int level = 0; level < 4; ++level) {
    edges = refine_panels(edges);
    const cdouble cur = evaluate(edges);
    if (std::abs(cur - prev) <= options.tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  std::ostringstream msg;
  msg << "trace_direct: radial quadrature unresolved at Lambda = " << lambda;
  throw ResolutionError(msg.str());
}

SpectralTrace trace_spectral_parts(double lambda, const IsotypicFunction& f, const TraceOptions& options) {
  require_lambda(lambda);
  const IsotypicFunction inverted = inversion(f);
  const double two_log = 2.0 * std::log(lambda);
  const cdouble f1 = f.value_at_one();
  const cdouble b1 = op_B(inverted).value_at_one();

  // remainder: Gamma applied to (v_c - v)_+ K_1(v), evaluated at 1, with K_1 the
  // log profile of Gamma^{-1} I(f) and v_c = -2 log(Lambda).
  const double vc = -two_log;
  const auto panels = static_cast<std::size_t>(std::ceil(options.remainder_depth * 4.0));
  std::vector<double> edges(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) edges[i] = vc - 0.25 * static_cast<double>(panels - i);
  const CompositeRule rule = composite_rule(edges, 16);
  std::vector<double> reflected(rule.nodes.size());
  for (std::size_t i = 0; i < reflected.size(); ++i) reflected[i] = -rule.nodes[i];
  const std::vector<cdouble> k1 = profile_at(gamma_inverse(inverted).spectral(), rule.nodes);
  // (1/2 pi) int gamma_N(tau) e^{i tau v} dtau on the same tau-grid.
  const SpectralProfile gamma_kernel = gamma_transform(
      IsotypicFunction::from_spectral_profile(f.mode(), [](double) { return cdouble(1.0, 0.0); }, f.grids()))
                                           .spectral();
  const std::vector<cdouble> g = profile_at(gamma_kernel, reflected);
  cdouble remainder{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    remainder += rule.weights[i] * (vc - rule.nodes[i]) * k1[i] * g[i];
  }
  remainder *= static_cast<double>(f.mode().dimension());
  return {two_log * f1 - b1 + remainder, b1, remainder};
}

cdouble trace_spectral(double lambda, const IsotypicFunction& f, const TraceOptions& options) {
  return trace_spectral_parts(lambda, f, options).trace;
}

std::vector<TraceResult> residual_sweep(const TraceConfig& config) {
  config.validate();
  const cdouble f1 = config.f.value_at_one();
  const cdouble h1 = op_H(config.f).value_at_one();
  std::vector<TraceResult> out(config.lambdas.size());
  parallel_for(out.size(), [&](std::size_t i) {
    const double lambda = config.lambdas[i];
    TraceResult& r = out[i];
    r.lambda = lambda;
    r.trace_direct = trace_direct(lambda, config.f, config.options);
    const SpectralTrace parts = trace_spectral_parts(lambda, config.f, config.options);
    r.trace_spectral = parts.trace;
    r.leading = 2.0 * std::log(lambda) * f1;
    r.h_at_one = h1;
    r.residual = parts.remainder;
    r.residual_direct = r.trace_direct - r.leading + h1;
  });
  return out;
}

LinearFit fit_leading_term(const std::vector<TraceResult>& results) {
  if (results.size() < 2) throw std::invalid_argument("fit_leading_term: need at least two points");
  const double n = static_cast<double>(results.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& r : results) {
    const double x = 2.0 * std::log(r.lambda);
    const double y = r.trace_spectral.real();
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

}  // namespace qtate
