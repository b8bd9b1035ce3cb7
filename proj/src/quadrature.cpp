#include "qtate/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qtate/errors.hpp"

namespace qtate {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(std::size_t n, double x) {
  double prev = 1.0;
  double cur = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / static_cast<double>(k);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

GaussLegendreRule build_rule(std::size_t n) {
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  if (n == 1) {
    rule.weights[0] = 2.0;
    return rule;
  }
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, q] = legendre_pair(n, x);
      dp = nd * (x * p - q) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, q] = legendre_pair(n, x);
    dp = nd * (x * p - q) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(n));
  return *slot;
}

CompositeRule composite_rule(std::span<const double> edges, std::size_t nodes_per_panel) {
  const auto& rule = gauss_legendre(nodes_per_panel);
  CompositeRule out;
  if (edges.size() < 2) return out;
  out.nodes.reserve((edges.size() - 1) * nodes_per_panel);
  out.weights.reserve(out.nodes.capacity());
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (std::size_t k = 0; k < nodes_per_panel; ++k) {
      out.nodes.push_back(mid + half * rule.nodes[k]);
      out.weights.push_back(half * rule.weights[k]);
    }
  }
  return out;
}

std::complex<double> integrate_panels(const ComplexFn& f, std::span<const double> edges,
                                      std::size_t nodes_per_panel) {
  const CompositeRule rule = composite_rule(edges, nodes_per_panel);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

std::vector<double> refine_panels(std::span<const double> edges) {
  std::vector<double> out;
  if (edges.empty()) return out;
  out.reserve(2 * edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    out.push_back(edges[i]);
    out.push_back(0.5 * (edges[i] + edges[i + 1]));
  }
  out.push_back(edges.back());
  return out;
}

std::complex<double> integrate_with_doubling(const ComplexFn& f, std::vector<double> edges,
                                             std::size_t nodes_per_panel, double tol, int max_halvings) {
  std::complex<double> prev = integrate_panels(f, edges, nodes_per_panel);
  for (int level = 0; level < max_halvings; ++level) {
    edges = refine_panels(edges);
    const std::complex<double> cur = integrate_panels(f, edges, nodes_per_panel);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw ResolutionError("panel quadrature did not resolve after " + std::to_string(max_halvings) +
                        " halvings");
}

std::vector<std::vector<double>> richardson_table(std::span<const double> samples) {
  std::vector<std::vector<double>> table;
  table.emplace_back(samples.begin(), samples.end());
  double factor = 2.0;
  while (table.back().size() > 1) {
    const auto& prev = table.back();
    std::vector<double> next(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      next[i] = (factor * prev[i + 1] - prev[i]) / (factor - 1.0);
    }
    table.push_back(std::move(next));
    factor *= 2.0;
  }
  return table;
}

}  // namespace qtate
