#include "qtate/gamma_op.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qtate/specfun.hpp"

namespace qtate {

namespace {

const double kSqrt2Pi2 = std::sqrt(2.0) * std::numbers::pi;

constexpr int kTableRefinement = 8;
constexpr int kStencil = 10;

/// Lagrange interpolation on kStencil consecutive nodes; zero outside the grid.
cdouble interpolate(const LogProfile& k, double x) {
  const UniformGrid& g = k.grid;
  const double pos = (x - g.start) / g.step;
  const double last = static_cast<double>(g.count - 1);
  if (!(pos >= 0.0 && pos <= last)) return {0.0, 0.0};
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-12) return k.samples[static_cast<std::size_t>(nearest)];
  const auto first = static_cast<std::size_t>(
      std::clamp(std::floor(pos) - (kStencil / 2 - 1), 0.0, last - (kStencil - 1)));
  cdouble sum{0.0, 0.0};
  for (int j = 0; j < kStencil; ++j) {
    double w = 1.0;
    for (int m = 0; m < kStencil; ++m) {
      if (m != j) w *= (pos - static_cast<double>(first + m)) / static_cast<double>(j - m);
    }
    sum += w * k.samples[first + j];
  }
  return sum;
}

IsotypicFunction multiplied(const IsotypicFunction& f, const std::function<cdouble(AngularMode, double)>& m) {
  const AngularMode mode = f.mode();
  return f.with_spectral(apply_multiplier(f.spectral(), [&](double t) { return m(mode, t); }));
}

void require_compatible(const IsotypicFunction& f, const IsotypicFunction& g) {
  if (f.mode() != g.mode()) throw std::invalid_argument("isotypic functions live in different sectors");
  if (!(f.grids() == g.grids())) throw std::invalid_argument("isotypic functions use different grids");
}

}  // namespace

IsotypicFunction::IsotypicFunction(AngularMode mode, SpectralProfile psi, SpectralGrids grids)
    : mode_(mode), psi_(std::move(psi)), grids_(grids) {
  if (!(psi_.grid == grids_.tau) || psi_.samples.size() != grids_.tau.count) {
    throw std::invalid_argument("IsotypicFunction: profile grid does not match the tau-grid");
  }
  if (!grids_.tau.symmetric()) throw std::invalid_argument("IsotypicFunction: tau-grid must be symmetric");
  grids_.check_reciprocity();
}

IsotypicFunction IsotypicFunction::from_log_profile(AngularMode mode, const std::function<cdouble(double)>& k,
                                                    const SpectralGrids& grids) {
  return {mode, to_spectral(LogProfile::sample(grids.v, k), grids.tau), grids};
}

IsotypicFunction IsotypicFunction::from_spectral_profile(AngularMode mode,
                                                         const std::function<cdouble(double)>& psi,
                                                         const SpectralGrids& grids) {
  return {mode, SpectralProfile::sample(grids.tau, psi), grids};
}

IsotypicFunction IsotypicFunction::zero(AngularMode mode, const SpectralGrids& grids) {
  return {mode, SpectralProfile{grids.tau, std::vector<cdouble>(grids.tau.count)}, grids};
}

LogProfile IsotypicFunction::log_profile() const { return from_spectral(psi_, grids_.v); }

cdouble IsotypicFunction::profile_at(double v) const { return qtate::profile_at(psi_, v); }

cdouble IsotypicFunction::value_at_one() const {
  return static_cast<double>(mode_.dimension()) * evaluate_at_one(psi_);
}

cdouble IsotypicFunction::operator()(const Quaternion& g) const {
  const double n = reduced_norm(g);
  if (n == 0.0) throw std::domain_error("IsotypicFunction: evaluation at 0");
  return character_from_invariants(mode_, g.x0, n) * profile_at(2.0 * std::log(n));
}

double IsotypicFunction::l2_norm() const { return std::sqrt(l2_norm_squared(psi_)); }

IsotypicFunction IsotypicFunction::with_spectral(SpectralProfile psi) const {
  return {mode_, std::move(psi), grids_};
}

IsotypicFunction operator+(const IsotypicFunction& f, const IsotypicFunction& g) {
  require_compatible(f, g);
  SpectralProfile out = f.spectral();
  for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] += g.spectral().samples[i];
  return f.with_spectral(std::move(out));
}

IsotypicFunction operator-(const IsotypicFunction& f, const IsotypicFunction& g) { return f + (-1.0) * g; }

IsotypicFunction operator*(cdouble c, const IsotypicFunction& f) {
  SpectralProfile out = f.spectral();
  for (auto& x : out.samples) x *= c;
  return f.with_spectral(std::move(out));
}

double spectral_discrepancy(const IsotypicFunction& f, const IsotypicFunction& g) {
  require_compatible(f, g);
  double diff = 0.0;
  double scale = 1.0;
  const auto& a = f.spectral().samples;
  const auto& b = g.spectral().samples;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return diff / scale;
}

IsotypicFunction inversion(const IsotypicFunction& f) {
  SpectralProfile out = f.spectral();
  std::reverse(out.samples.begin(), out.samples.end());
  return f.with_spectral(std::move(out));
}

IsotypicFunction gamma_transform(const IsotypicFunction& f) {
  return multiplied(f, [](AngularMode mode, double t) { return gamma_multiplier(mode, t); });
}

IsotypicFunction gamma_inverse(const IsotypicFunction& f) {
  return multiplied(f, [](AngularMode mode, double t) { return std::conj(gamma_multiplier(mode, t)); });
}

IsotypicFunction fourier_transform(const IsotypicFunction& f) { return gamma_transform(inversion(f)); }

IsotypicFunction op_A(const IsotypicFunction& f) {
  LogProfile k = f.log_profile();
  for (std::size_t i = 0; i < k.samples.size(); ++i) k.samples[i] *= k.grid.point(i);
  return f.with_spectral(to_spectral(k, f.grids().tau));
}

IsotypicFunction op_H(const IsotypicFunction& f) {
  return multiplied(f, [](AngularMode mode, double t) { return cdouble(h_N(mode, t), 0.0); });
}

IsotypicFunction op_B(const IsotypicFunction& f) { return op_H(f) - op_A(f); }

IsotypicFunction op_K(const IsotypicFunction& f) {
  return multiplied(f, [](AngularMode mode, double t) { return cdouble(k_N(mode, t), 0.0); });
}

AdditiveFunction::AdditiveFunction(AngularMode mode, Profile log_profile)
    : mode_(mode), k_(std::move(log_profile)) {
  if (!k_) throw std::invalid_argument("AdditiveFunction: empty profile");
}

cdouble AdditiveFunction::radial(double norm) const {
  if (!(norm > 0.0)) throw std::domain_error("AdditiveFunction: evaluation at 0");
  return k_(2.0 * std::log(norm)) / (kSqrt2Pi2 * norm);
}

cdouble AdditiveFunction::from_invariants(double re, double norm) const {
  return character_from_invariants(mode_, re, norm) * radial(norm);
}

cdouble AdditiveFunction::operator()(const Quaternion& x) const { return from_invariants(x.x0, reduced_norm(x)); }

AdditiveFunction to_additive(const IsotypicFunction& f) {
  const UniformGrid& v = f.grids().v;
  auto table = std::make_shared<const LogProfile>(
      from_spectral(f.spectral(), UniformGrid::centered(v.half_width(), v.step / kTableRefinement)));
  return {f.mode(), [table](double x) { return interpolate(*table, x); }};
}

}  // namespace qtate
