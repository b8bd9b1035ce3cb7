#pragma once

#include <array>
#include <complex>

namespace qtate {

/// Real quaternion x0 + x1 i + x2 j + x3 k.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a0, double a1, double a2, double a3) : x0(a0), x1(a1), x2(a2), x3(a3) {}
  /// Embeds a real scalar.
  constexpr explicit Quaternion(double real) : x0(real) {}

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Complex coordinates in x = a + b j: a = x0 + x1 i, b = x2 + x3 i.
  std::complex<double> a() const { return {x0, x1}; }
  std::complex<double> b() const { return {x2, x3}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.x0 + q.x0, p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3};
}
constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.x0 - q.x0, p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3};
}
constexpr Quaternion operator-(const Quaternion& q) { return {-q.x0, -q.x1, -q.x2, -q.x3}; }
constexpr Quaternion operator*(double c, const Quaternion& q) {
  return {c * q.x0, c * q.x1, c * q.x2, c * q.x3};
}
constexpr Quaternion operator*(const Quaternion& q, double c) { return c * q; }

/// Hamilton product: i^2 = j^2 = k^2 = -1, ij = k = -ji, jk = i = -kj, ki = j = -ik.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
          p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
          p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
          p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }

/// n(q) = q conj(q) = sum of squared coordinates.
constexpr double reduced_norm(const Quaternion& q) {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

/// Module |q| = n(q)^2: the factor by which left or right multiplication by q
/// scales additive Haar measure on the quaternions.
constexpr double module(const Quaternion& q) {
  const double n = reduced_norm(q);
  return n * n;
}

/// Multiplicative inverse; throws std::domain_error at zero.
Quaternion inverse(const Quaternion& q);

/// g = r * unit with r = n(g)^{1/2} = |g|^{1/4} and n(unit) = 1.
struct PolarForm {
  double r = 0.0;
  Quaternion unit;
};

/// Throws std::domain_error for the zero quaternion.
PolarForm polar(const Quaternion& q);

/// Additive character lambda(x) = exp(-2 pi i (x + conj x)) = exp(-4 pi i Re x).
std::complex<double> character_lambda(const Quaternion& q);

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<std::complex<double>, 4>;

Mat2 matmul(const Mat2& lhs, const Mat2& rhs);
std::complex<double> det(const Mat2& m);

/// Left-action matrix L_q = [[a, b], [-conj b, conj a]] and right-multiplication
/// matrix R_q = [[a, -conj b], [b, conj a]].
struct MatrixReps {
  Mat2 left;
  Mat2 right;
};
MatrixReps matrix_reps(const Quaternion& q);

}  // namespace qtate
