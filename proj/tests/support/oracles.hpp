#pragma once

// Independent reference implementations used only by tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "qtate/quaternion.hpp"

namespace qtate::testing {

using cdouble = std::complex<double>;

/// log Gamma by upward recurrence to |z| >= 15 and the Stirling series.
inline cdouble stirling_log_gamma(cdouble z) {
  cdouble shift{0.0, 0.0};
  while (std::abs(z) < 15.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  const cdouble w = 1.0 / (z * z);
  // B_2k / (2k (2k-1) z^(2k-1)), k = 1..8
  const cdouble series =
      (1.0 / 12 + w * (-1.0 / 360 + w * (1.0 / 1260 + w * (-1.0 / 1680 + w * (1.0 / 1188 +
       w * (-691.0 / 360360 + w * (1.0 / 156 + w * (-3617.0 / 122400)))))))) / z;
  return shift + (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

/// Mean of a function over the unit quaternions in Hopf coordinates
/// x = (cos e cos a, cos e sin a, sin e cos b, sin e sin b), density sin e cos e / (2 pi^2).
inline cdouble hopf_sphere_mean(const std::function<cdouble(const Quaternion&)>& fn, int n_eta = 96,
                                int n_angle = 64) {
  const double pi = std::numbers::pi;
  cdouble sum{0.0, 0.0};
  // midpoint in eta, periodic trapezoid in the two circle angles
  for (int i = 0; i < n_eta; ++i) {
    const double eta = 0.5 * pi * (i + 0.5) / n_eta;
    const double weight = std::sin(eta) * std::cos(eta) * (0.5 * pi / n_eta);
    for (int j = 0; j < n_angle; ++j) {
      const double a = 2.0 * pi * j / n_angle;
      for (int k = 0; k < n_angle; ++k) {
        const double b = 2.0 * pi * k / n_angle;
        const Quaternion x{std::cos(eta) * std::cos(a), std::cos(eta) * std::sin(a), std::sin(eta) * std::cos(b),
                           std::sin(eta) * std::sin(b)};
        sum += weight * fn(x) * (2.0 * pi / n_angle) * (2.0 * pi / n_angle);
      }
    }
  }
  return sum / (2.0 * pi * pi);
}

/// Composite Simpson rule with n (even) intervals.
inline cdouble simpson(const std::function<cdouble(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  cdouble sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

inline double relative_error(cdouble value, cdouble reference) {
  const double scale = std::abs(reference);
  return scale == 0.0 ? std::abs(value) : std::abs(value - reference) / scale;
}

/// max |a - b| / max |b|.
inline double max_relative_error(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return scale == 0.0 ? diff : diff / scale;
}

inline Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng), n(rng), n(rng)};
}

inline Quaternion random_unit(std::mt19937_64& rng) {
  const Quaternion q = random_quaternion(rng);
  return (1.0 / std::sqrt(reduced_norm(q))) * q;
}

}  // namespace qtate::testing
