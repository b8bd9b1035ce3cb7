#include "qtate/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qtate/errors.hpp"
#include "qtate/parallel.hpp"
#include "qtate/quadrature.hpp"

namespace qtate {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2Pi = std::log(2.0 * kPi);

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

void require_right_half_plane(cdouble z, const char* who) {
  if (!(z.real() > 0.0)) {
    std::ostringstream msg;
    msg << who << ": requires Re(z) > 0, got " << z;
    throw std::domain_error(msg.str());
  }
}

// Lanczos sum, valid for Re(z) >= 1/2.
cdouble lanczos_log_gamma(cdouble z) {
  z -= 1.0;
  cdouble x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cdouble t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log Gamma(1 + x) = -euler_gamma x + sum_{k>=2} (-1)^k zeta(k) x^k / k, for |x| <= 1/4.
// Used near the zeros of log Gamma at 1 and 2, where the Lanczos form cancels.
cdouble log_gamma_near_one(cdouble x) {
  static const std::array<double, 48> zeta = [] {
    std::array<double, 48> z{};
    for (std::size_t k = 2; k < z.size(); ++k) z[k] = std::riemann_zeta(static_cast<double>(k));
    return z;
  }();
  cdouble sum = -std::numbers::egamma * x;
  cdouble power = -x;
  for (std::size_t k = 2; k < zeta.size(); ++k) {
    power *= -x;
    sum += zeta[k] * power / static_cast<double>(k);
  }
  return sum;
}

// log(1 + x) without cancellation for small x.
cdouble log1p(cdouble x) {
  return {0.5 * std::log1p(2.0 * x.real() + std::norm(x)), std::atan2(x.imag(), 1.0 + x.real())};
}

constexpr double kSeriesRadius = 0.25;

}  // namespace

cdouble i_power(unsigned n) {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

CriticalStripPoint::CriticalStripPoint(cdouble s) : s_(s) {
  if (!(s.real() > 0.0 && s.real() < 1.0)) {
    std::ostringstream msg;
    msg << "CriticalStripPoint: Re(s) must lie in (0, 1), got " << s;
    throw std::domain_error(msg.str());
  }
}

cdouble log_gamma(cdouble z) {
  require_right_half_plane(z, "log_gamma");
  if (std::abs(z - 1.0) <= kSeriesRadius) return log_gamma_near_one(z - 1.0);
  if (std::abs(z - 2.0) <= kSeriesRadius) return log_gamma_near_one(z - 2.0) + log1p(z - 2.0);
  if (z.real() < 0.5) return log_gamma(z + 1.0) - std::log(z);
  return lanczos_log_gamma(z);
}

cdouble digamma(cdouble z) {
  require_right_half_plane(z, "digamma");
  cdouble shift{0.0, 0.0};
  while (std::abs(z) < 20.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const cdouble w = 1.0 / (z * z);
  // -sum_k B_2k / (2k z^2k), k = 1..7
  const cdouble tail =
      w * (-1.0 / 12 + w * (1.0 / 120 + w * (-1.0 / 252 + w * (1.0 / 240 +
      w * (-1.0 / 132 + w * (691.0 / 32760 + w * (-1.0 / 12)))))));
  return shift + std::log(z) - 0.5 / z + tail;
}

cdouble trigamma(cdouble z) {
  require_right_half_plane(z, "trigamma");
  cdouble shift{0.0, 0.0};
  while (std::abs(z) < 20.0) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  const cdouble w = 1.0 / (z * z);
  // sum_k B_2k / z^(2k+1), k = 1..7
  const cdouble tail =
      w * (1.0 / 6 + w * (-1.0 / 30 + w * (1.0 / 42 + w * (-1.0 / 30 +
      w * (5.0 / 66 + w * (-691.0 / 2730 + w * (7.0 / 6))))))) / z;
  return shift + 1.0 / z + 0.5 * w + tail;
}

cdouble gamma_N(AngularMode mode, CriticalStripPoint s) {
  const cdouble sv = s.value();
  const double half_n = 0.5 * mode.value();
  const cdouble log_ratio = (2.0 - 4.0 * sv) * kLog2Pi + log_gamma(2.0 * sv + half_n) -
                            log_gamma(2.0 * (1.0 - sv) + half_n);
  return i_power(mode.value()) * std::exp(log_ratio);
}

cdouble gamma_multiplier(AngularMode mode, double tau) {
  // Gamma(z-bar) = conj Gamma(z): only the phase survives.
  const cdouble lg = log_gamma({1.0 + 0.5 * mode.value(), 2.0 * tau});
  const double phase = -4.0 * tau * kLog2Pi + 2.0 * lg.imag();
  return i_power(mode.value()) * cdouble(std::cos(phase), std::sin(phase));
}

cdouble H_N(AngularMode mode, CriticalStripPoint s) {
  const cdouble sv = s.value();
  const double half_n = 0.5 * mode.value();
  return -4.0 * kLog2Pi + 2.0 * digamma(2.0 * sv + half_n) + 2.0 * digamma(2.0 * (1.0 - sv) + half_n);
}

double h_N(AngularMode mode, double tau) {
  return -4.0 * kLog2Pi + 4.0 * digamma({1.0 + 0.5 * mode.value(), 2.0 * tau}).real();
}

double k_N(AngularMode mode, double tau) {
  return 8.0 * trigamma({1.0 + 0.5 * mode.value(), 2.0 * tau}).imag();
}

double g_distribution_constant() { return 4.0 * kLog2Pi + 4.0 * std::numbers::egamma - 2.0; }

Gamma0Expansion gamma0_expansion(int order, double tol, int levels) {
  if (order != 2 && order != 3) throw std::invalid_argument("gamma0_expansion: order must be 2 or 3");
  if (levels < 2) throw std::invalid_argument("gamma0_expansion: need at least two levels");
  // Extrapolate l(eps) = log(g(eps) / eps), whose Taylor coefficients grow far more
  // slowly than those of g itself, then recover g's coefficients from exp(l).
  std::vector<double> eps(static_cast<std::size_t>(levels));
  std::vector<double> ell(eps.size());
  for (std::size_t k = 0; k < eps.size(); ++k) {
    // sample where 1 - eps is exact, since gamma_N only sees s = 1 - eps
    const double s = 1.0 - 1e-2 / std::ldexp(1.0, static_cast<int>(k));
    eps[k] = 1.0 - s;
    const double g = (2.0 * kPi * kPi * gamma_N(AngularMode(0), CriticalStripPoint(s))).real();
    ell[k] = std::log(g / eps[k]);
  }
  std::vector<double> l;
  std::vector<double> gaps;
  for (int c = 0; c < order; ++c) {
    std::vector<double> samples(eps.size());
    for (std::size_t k = 0; k < eps.size(); ++k) {
      double rest = ell[k];
      double power = 1.0;
      for (double known : l) {
        rest -= known * power;
        power *= eps[k];
      }
      samples[k] = rest / power;
    }
    const auto table = richardson_table(samples);
    const double best = table.back().front();
    l.push_back(best);
    gaps.push_back(std::abs(best - table[table.size() - 2].back()));
  }
  const double c1 = std::exp(l[0]);
  Gamma0Expansion out;
  out.coefficients.push_back(c1);
  out.coefficients.push_back(c1 * l[1]);
  out.convergence.push_back(c1 * gaps[0]);
  out.convergence.push_back(c1 * (gaps[1] + std::abs(l[1]) * gaps[0]));
  if (order == 3) {
    out.coefficients.push_back(c1 * (l[2] + 0.5 * l[1] * l[1]));
    out.convergence.push_back(c1 * (gaps[2] + std::abs(l[1]) * gaps[1]) +
                              std::abs(out.coefficients[2]) * gaps[0]);
  }
  for (std::size_t c = 0; c < out.convergence.size(); ++c) {
    if (out.convergence[c] > tol) {
      std::ostringstream msg;
      msg << "gamma0_expansion: coefficient of eps^" << c + 1 << " unsettled (gap " << out.convergence[c]
          << " > tol " << tol << ")";
      throw ConvergenceError(msg.str());
    }
  }
  return out;
}

SpectralFunctionTable SpectralFunctionTable::build(AngularMode mode, const UniformGrid& tau) {
  SpectralFunctionTable table{mode, tau, std::vector<cdouble>(tau.count), std::vector<double>(tau.count),
                              std::vector<double>(tau.count)};
  parallel_for(tau.count, [&](std::size_t i) {
    const double t = tau.point(i);
    table.gamma[i] = gamma_multiplier(mode, t);
    table.h[i] = h_N(mode, t);
    table.k[i] = k_N(mode, t);
  });
  return table;
}

double SpectralFunctionTable::max_invariant_violation() const {
  double worst = 0.0;
  const std::size_t n = gamma.size();
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(std::abs(gamma[i]) - 1.0));
  if (tau.symmetric()) {
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(h[i] - h[n - 1 - i]));
      worst = std::max(worst, std::abs(k[i] + k[n - 1 - i]));
    }
  }
  return worst;
}

}  // namespace qtate
