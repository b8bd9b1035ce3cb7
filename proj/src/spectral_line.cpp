#include "qtate/spectral_line.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qtate/errors.hpp"
#include "qtate/parallel.hpp"

namespace qtate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kPhaseReset = 64;

double boundary_level_of(const std::vector<cdouble>& s) {
  if (s.empty()) return 0.0;
  double peak = 1.0;
  for (const auto& x : s) peak = std::max(peak, std::abs(x));
  return std::max(std::abs(s.front()), std::abs(s.back())) / peak;
}

std::vector<cdouble> weighted_samples(const std::vector<cdouble>& x, const UniformGrid& grid) {
  const std::vector<double> w = trapezoid_weights(grid);
  std::vector<cdouble> out(x.size());
  for (std::size_t m = 0; m < x.size(); ++m) out[m] = w[m] * x[m];
  return out;
}

// sum_m x_m e^{i t y_m} with the phase advanced by recurrence, re-anchored every kPhaseReset steps.
cdouble phase_sum(const std::vector<cdouble>& x, const UniformGrid& y, double t) {
  const cdouble step = std::polar(1.0, t * y.step);
  cdouble sum{0.0, 0.0};
  cdouble phase;
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (m % kPhaseReset == 0) {
      phase = std::polar(1.0, t * y.point(m));
    } else {
      phase *= step;
    }
    sum += x[m] * phase;
  }
  return sum;
}

std::vector<cdouble> uniform_sum(const std::vector<cdouble>& x, const UniformGrid& in,
                                 const std::vector<double>& out, double sign, double scale) {
  const std::vector<cdouble> weighted = weighted_samples(x, in);
  std::vector<cdouble> result(out.size());
  parallel_for(out.size(), [&](std::size_t j) { result[j] = scale * phase_sum(weighted, in, sign * out[j]); });
  return result;
}

}  // namespace

SpectralGrids SpectralGrids::defaults() {
  return {UniformGrid::centered(48.0, 1.0 / 32.0), UniformGrid::centered(64.0, 1.0 / 64.0)};
}

void SpectralGrids::check_reciprocity() const {
  const double a = tau.step * v.half_width();
  const double b = v.step * tau.half_width();
  if (a > kPi / 4.0 || b > kPi) {
    std::ostringstream msg;
    msg << "grid reciprocity violated: dtau*V = " << a << " (max pi/4), dv*T = " << b << " (max pi)";
    throw AliasingError(msg.str());
  }
}

LogProfile LogProfile::sample(const UniformGrid& grid, const std::function<cdouble(double)>& k) {
  LogProfile out{grid, std::vector<cdouble>(grid.count)};
  for (std::size_t i = 0; i < grid.count; ++i) out.samples[i] = k(grid.point(i));
  return out;
}

double LogProfile::boundary_level() const { return boundary_level_of(samples); }
bool LogProfile::decays(double tol) const { return boundary_level() <= tol; }

SpectralProfile SpectralProfile::sample(const UniformGrid& grid, const std::function<cdouble(double)>& psi) {
  SpectralProfile out{grid, std::vector<cdouble>(grid.count)};
  for (std::size_t i = 0; i < grid.count; ++i) out.samples[i] = psi(grid.point(i));
  return out;
}

double SpectralProfile::boundary_level() const { return boundary_level_of(samples); }
bool SpectralProfile::decays(double tol) const { return boundary_level() <= tol; }

std::vector<double> trapezoid_weights(const UniformGrid& grid) {
  std::vector<double> w(grid.count, grid.step);
  if (!w.empty()) {
    w.front() *= 0.5;
    w.back() *= 0.5;
  }
  return w;
}

SpectralProfile to_spectral(const LogProfile& k, const UniformGrid& tau) {
  SpectralGrids{k.grid, tau}.check_reciprocity();
  return {tau, uniform_sum(k.samples, k.grid, tau.points(), 1.0, 1.0)};
}

LogProfile from_spectral(const SpectralProfile& psi, const UniformGrid& v) {
  SpectralGrids{v, psi.grid}.check_reciprocity();
  return {v, profile_at(psi, v.points())};
}

cdouble profile_at(const SpectralProfile& psi, double v) { return profile_at(psi, std::vector<double>{v}).front(); }

std::vector<cdouble> profile_at(const SpectralProfile& psi, const std::vector<double>& v) {
  return uniform_sum(psi.samples, psi.grid, v, -1.0, 0.5 / kPi);
}

SpectralProfile apply_multiplier(const SpectralProfile& psi, const std::function<cdouble(double)>& m) {
  SpectralProfile out = psi;
  for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] *= m(psi.grid.point(i));
  return out;
}

SpectralProfile apply_multiplier(const SpectralProfile& psi, const std::vector<cdouble>& m) {
  if (m.size() != psi.samples.size()) throw std::invalid_argument("apply_multiplier: size mismatch");
  SpectralProfile out = psi;
  for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] *= m[i];
  return out;
}

cdouble evaluate_at_one(const SpectralProfile& psi) {
  const std::vector<double> w = trapezoid_weights(psi.grid);
  cdouble sum{0.0, 0.0};
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * psi.samples[i];
  return 0.5 / kPi * sum;
}

double l2_norm_squared(const LogProfile& k) {
  const std::vector<double> w = trapezoid_weights(k.grid);
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * std::norm(k.samples[i]);
  return sum;
}

double l2_norm_squared(const SpectralProfile& psi) {
  const std::vector<double> w = trapezoid_weights(psi.grid);
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * std::norm(psi.samples[i]);
  return 0.5 / kPi * sum;
}

}  // namespace qtate
