#include "qtate/additive_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qtate/parallel.hpp"
#include "qtate/quadrature.hpp"
#include "qtate/spectral_line.hpp"

namespace qtate {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2Pi2 = std::sqrt(2.0) * kPi;

std::vector<double> uniform_edges(double a, double b, double width) {
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / width)));
  std::vector<double> edges(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) edges[i] = a + (b - a) * static_cast<double>(i) / panels;
  return edges;
}

// int_a^b fn(t) dt over panels of width 1/8 in t = log r.
cdouble integrate_log_radius(const std::function<cdouble(double)>& fn, double a, double b, double tol) {
  return integrate_with_doubling(fn, uniform_edges(a, b, 0.125), 8, tol);
}

}  // namespace

// ---- grids ---------------------------------------------------------------------------

Grid4D::Grid4D(double half_extent, std::size_t points) : half_extent_(half_extent), points_(points) {
  if (!(half_extent > 0.0)) throw std::invalid_argument("Grid4D: half extent must be positive");
  if (points < 3 || points % 2 == 0) throw std::invalid_argument("Grid4D: points per axis must be odd and >= 3");
}

double Grid4D::coordinate(std::size_t i) const {
  return (static_cast<double>(i) - static_cast<double>(center())) * spacing();
}

Quaternion Grid4D::point(std::size_t i0, std::size_t i1, std::size_t i2, std::size_t i3) const {
  return {coordinate(i0), coordinate(i1), coordinate(i2), coordinate(i3)};
}

GridFunction::GridFunction(Grid4D grid, std::vector<cdouble> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) throw std::invalid_argument("GridFunction: sample count mismatch");
}

GridFunction GridFunction::sample(const Grid4D& grid, const std::function<cdouble(const Quaternion&)>& fn) {
  const std::size_t m = grid.points();
  std::vector<cdouble> out(grid.size());
  parallel_for(m, [&](std::size_t i0) {
    std::size_t idx = i0 * m * m * m;
    for (std::size_t i1 = 0; i1 < m; ++i1)
      for (std::size_t i2 = 0; i2 < m; ++i2)
        for (std::size_t i3 = 0; i3 < m; ++i3) out[idx++] = fn(grid.point(i0, i1, i2, i3));
  });
  return {grid, std::move(out)};
}

GridFunction GridFunction::sample_central(const Grid4D& grid, AngularMode mode,
                                          const std::function<cdouble(double)>& radial_of_norm, cdouble at_zero) {
  const std::size_t m = grid.points();
  const auto c = static_cast<long>(grid.center());
  const double h = grid.spacing();
  // n(x) = h^2 * (sum of squared integer offsets)
  const std::size_t max_key = 4 * static_cast<std::size_t>(c * c);
  std::vector<char> occurs(max_key + 1, 0);
  for (long a = 0; a <= c; ++a)
    for (long b = a; b <= c; ++b)
      for (long d = b; d <= c; ++d)
        for (long e = d; e <= c; ++e) occurs[a * a + b * b + d * d + e * e] = 1;
  std::vector<std::size_t> keys;
  for (std::size_t k = 1; k <= max_key; ++k)
    if (occurs[k]) keys.push_back(k);
  std::vector<cdouble> radial(max_key + 1);
  parallel_for(keys.size(), [&](std::size_t i) {
    radial[keys[i]] = radial_of_norm(h * h * static_cast<double>(keys[i]));
  });
  std::vector<cdouble> out(grid.size());
  parallel_for(m, [&](std::size_t i0) {
    std::size_t idx = i0 * m * m * m;
    const long k0 = static_cast<long>(i0) - c;
    for (std::size_t i1 = 0; i1 < m; ++i1)
      for (std::size_t i2 = 0; i2 < m; ++i2)
        for (std::size_t i3 = 0; i3 < m; ++i3) {
          const long k1 = static_cast<long>(i1) - c;
          const long k2 = static_cast<long>(i2) - c;
          const long k3 = static_cast<long>(i3) - c;
          const auto key = static_cast<std::size_t>(k0 * k0 + k1 * k1 + k2 * k2 + k3 * k3);
          if (key == 0) {
            out[idx++] = at_zero;
            continue;
          }
          const double n = h * h * static_cast<double>(key);
          out[idx++] = character_from_invariants(mode, h * static_cast<double>(k0), n) * radial[key];
        }
  });
  return {grid, std::move(out)};
}

GridFunction GridFunction::sample_additive(const Grid4D& grid, const AdditiveFunction& phi, cdouble at_zero) {
  return sample_central(grid, phi.mode(), [&](double n) { return phi.radial(n); }, at_zero);
}

cdouble GridFunction::at(std::size_t i0, std::size_t i1, std::size_t i2, std::size_t i3) const {
  const std::size_t m = grid_.points();
  return samples_[((i0 * m + i1) * m + i2) * m + i3];
}

double GridFunction::boundary_level() const {
  const std::size_t m = grid_.points();
  double level = 0.0;
  std::size_t idx = 0;
  for (std::size_t i0 = 0; i0 < m; ++i0)
    for (std::size_t i1 = 0; i1 < m; ++i1)
      for (std::size_t i2 = 0; i2 < m; ++i2)
        for (std::size_t i3 = 0; i3 < m; ++i3, ++idx) {
          const bool face = i0 == 0 || i0 == m - 1 || i1 == 0 || i1 == m - 1 || i2 == 0 || i2 == m - 1 ||
                            i3 == 0 || i3 == m - 1;
          if (face) level = std::max(level, std::abs(samples_[idx]));
        }
  return level;
}

GridFunction GridFunction::conjugated() const {
  std::vector<cdouble> out(samples_.size());
  std::transform(samples_.begin(), samples_.end(), out.begin(), [](cdouble z) { return std::conj(z); });
  return {grid_, std::move(out)};
}

// ---- Fourier transforms --------------------------------------------------------------

std::vector<cdouble> brute_fourier(const GridFunction& phi, const std::vector<Quaternion>& probes) {
  const Grid4D& grid = phi.grid();
  const std::size_t m = grid.points();
  const double h = grid.spacing();
  const double weight = 4.0 * h * h * h * h;
  std::vector<cdouble> out(probes.size());
  parallel_for(probes.size(), [&](std::size_t p) {
    // Re(x y) = x0 y0 - x1 y1 - x2 y2 - x3 y3, so the kernel factors per axis.
    const Quaternion& y = probes[p];
    const double coeff[4] = {y.x0, -y.x1, -y.x2, -y.x3};
    std::vector<cdouble> axis[4];
    for (int a = 0; a < 4; ++a) {
      axis[a].resize(m);
      for (std::size_t i = 0; i < m; ++i) axis[a][i] = std::polar(1.0, 4.0 * kPi * grid.coordinate(i) * coeff[a]);
    }
    const auto& s = phi.samples();
    cdouble total{0.0, 0.0};
    std::size_t idx = 0;
    for (std::size_t i0 = 0; i0 < m; ++i0) {
      cdouble s0{0.0, 0.0};
      for (std::size_t i1 = 0; i1 < m; ++i1) {
        cdouble s1{0.0, 0.0};
        for (std::size_t i2 = 0; i2 < m; ++i2) {
          cdouble s2{0.0, 0.0};
          for (std::size_t i3 = 0; i3 < m; ++i3) s2 += s[idx++] * axis[3][i3];
          s1 += s2 * axis[2][i2];
        }
        s0 += s1 * axis[1][i1];
      }
      total += s0 * axis[0][i0];
    }
    out[p] = weight * total;
  });
  return out;
}

std::vector<cdouble> radial_fourier(AngularMode mode, const std::function<cdouble(double)>& radial, double r_max,
                                    const std::vector<Quaternion>& probes, double tol) {
  if (!(r_max > 0.0)) throw std::invalid_argument("radial_fourier: r_max must be positive");
  std::vector<cdouble> out(probes.size());
  parallel_for(probes.size(), [&](std::size_t p) {
    const double ny = reduced_norm(probes[p]);
    if (ny == 0.0 && mode.value() != 0) {
      out[p] = 0.0;
      return;
    }
    const double rho = std::sqrt(ny);
    auto integrand = [&](double r) { return radial(r) * angular_bessel(mode, r * rho) * (r * r * r); };
    const cdouble integral = integrate_with_doubling(integrand, uniform_edges(0.0, r_max, 0.25 / (1.0 + 2.0 * rho)),
                                                     16, tol);
    const double chi = ny == 0.0 ? 1.0 : character_from_invariants(mode, probes[p].x0, ny);
    out[p] = chi * static_cast<double>(mode.parity()) / static_cast<double>(mode.dimension()) * 8.0 * kPi * kPi *
             integral;
  });
  return out;
}

// ---- distributions -------------------------------------------------------------------

ZonalFunction shifted(const ZonalFunction& phi, double a) {
  return [phi, a](double re, double norm) { return phi(a - re, a * a - 2.0 * a * re + norm); };
}

ZonalFunction zonal(const AdditiveFunction& phi) {
  return [phi](double re, double norm) { return phi.from_invariants(re, norm); };
}

cdouble sphere_average(const ZonalFunction& phi, double r, double tol) {
  return integrate_class_function([&](double theta) { return phi(r * std::cos(theta), r * r); }, tol, 64);
}

cdouble distribution_G(const ZonalFunction& phi, const RadialWindow& window) {
  if (!(window.r_max > 1.0)) throw std::invalid_argument("distribution_G: r_max must exceed 1");
  const cdouble phi0 = phi(0.0, 0.0);
  const double ang_tol = 0.1 * window.tol;
  const cdouble inner = integrate_log_radius(
      [&](double t) { return sphere_average(phi, std::exp(t), ang_tol) - phi0; }, window.log_r_min, 0.0,
      window.tol);
  const cdouble outer = integrate_log_radius([&](double t) { return sphere_average(phi, std::exp(t), ang_tol); },
                                             0.0, std::log(window.r_max), window.tol);
  return 4.0 * (inner + outer) + g_distribution_constant() * phi0;
}

cdouble g_convolution_at(const ZonalFunction& phi, double a, const RadialWindow& window) {
  return distribution_G(shifted(phi, a), window);
}

cdouble op_B_at_one_via_G(const AdditiveFunction& phi, const RadialWindow& window) {
  return -kSqrt2Pi2 * g_convolution_at(zonal(phi), 1.0, window);
}

HomogeneousDistribution::HomogeneousDistribution(cdouble s) : s_(s) {
  if (!(s.real() > -0.25) || s == cdouble(0.0, 0.0)) {
    throw std::domain_error("HomogeneousDistribution: requires Re(s) > -1/4 and s != 0");
  }
}

cdouble HomogeneousDistribution::operator()(const ZonalFunction& phi, const RadialWindow& window) const {
  if (!(window.r_max > 1.0)) throw std::invalid_argument("HomogeneousDistribution: r_max must exceed 1");
  const cdouble phi0 = phi(0.0, 0.0);
  const cdouble s4 = 4.0 * s_;
  const double ang_tol = 0.1 * window.tol;
  const cdouble inner = integrate_log_radius(
      [&](double t) { return (sphere_average(phi, std::exp(t), ang_tol) - phi0) * std::exp(s4 * t); },
      window.log_r_min, 0.0, window.tol);
  const cdouble outer = integrate_log_radius(
      [&](double t) { return sphere_average(phi, std::exp(t), ang_tol) * std::exp(s4 * t); }, 0.0,
      std::log(window.r_max), window.tol);
  return 8.0 * kPi * kPi * (inner + outer) + 2.0 * kPi * kPi / s_ * phi0;
}

cdouble HomogeneousDistribution::direct(const ZonalFunction& phi, const RadialWindow& window) const {
  if (!(s_.real() > 0.0)) throw std::domain_error("HomogeneousDistribution::direct: requires Re(s) > 0");
  // r^{4s} must fall below e^{-40} at the inner shell.
  const double lo = std::min(window.log_r_min, -10.0 / s_.real());
  const cdouble s4 = 4.0 * s_;
  const cdouble integral = integrate_log_radius(
      [&](double t) { return sphere_average(phi, std::exp(t), 0.1 * window.tol) * std::exp(s4 * t); }, lo,
      std::log(window.r_max), window.tol);
  return 8.0 * kPi * kPi * integral;
}

// ---- Gaussian moments ----------------------------------------------------------------

cdouble gaussian_moment(AngularMode mode, CriticalStripPoint s) {
  const cdouble a = 2.0 * s.value() + 0.5 * mode.value();
  return 4.0 * kPi * kPi * std::exp(log_gamma(a) - a * std::log(2.0 * kPi));
}

cdouble gaussian_moment_quadrature(AngularMode mode, CriticalStripPoint s) {
  // r = e^x: 8 pi^2 int e^{(4s+N) x} exp(-2 pi e^{2x}) dx, trapezoid with step 1/16.
  const cdouble a = 4.0 * s.value() + static_cast<double>(mode.value());
  const double step = 1.0 / 16.0;
  const double lo = -40.0 / a.real();
  const double hi = 2.5;
  const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  cdouble sum{0.0, 0.0};
  for (std::size_t i = 0; i <= count; ++i) {
    const double x = hi - static_cast<double>(i) * step;
    sum += std::exp(a * x - 2.0 * kPi * std::exp(2.0 * x));
  }
  return 8.0 * kPi * kPi * step * sum;
}

double functional_equation_residual(AngularMode mode, CriticalStripPoint s) {
  const cdouble lhs = i_power(mode.value()) * gaussian_moment(mode, s);
  const cdouble rhs = gamma_N(mode, s) * gaussian_moment(mode, s.reflected());
  return std::abs(lhs - rhs) / std::abs(lhs);
}

HomogeneityResidual homogeneity_check(const IsotypicFunction& f, CriticalStripPoint s) {
  return homogeneity_check(f, std::vector<CriticalStripPoint>{s}).front();
}

std::vector<HomogeneityResidual> homogeneity_check(const IsotypicFunction& f,
                                                   const std::vector<CriticalStripPoint>& points) {
  // v in [-64, 64]: the tails of H(f) decay only like e^{-|v|/2}.
  const UniformGrid v = UniformGrid::centered(64.0, 1.0 / 32.0);
  const std::vector<double> nodes = v.points();
  const std::vector<double> w = trapezoid_weights(v);
  const std::vector<cdouble> k = profile_at(f.spectral(), nodes);
  const std::vector<cdouble> kh = profile_at(op_H(f).spectral(), nodes);
  const double angular = AngularQuadrature(64).character_inner(f.mode(), f.mode());
  std::vector<HomogeneityResidual> out;
  for (const CriticalStripPoint& s : points) {
    cdouble plain{0.0, 0.0};
    cdouble with_h{0.0, 0.0};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const cdouble kernel = w[i] * std::exp((0.5 - s.value()) * nodes[i]);
      plain += kernel * k[i];
      with_h += kernel * kh[i];
    }
    const cdouble lhs = kSqrt2Pi2 * angular * with_h;
    const cdouble rhs = H_N(f.mode(), s) * kSqrt2Pi2 * angular * plain;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    out.push_back({lhs, rhs, scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale});
  }
  return out;
}

}  // namespace qtate
