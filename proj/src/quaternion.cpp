#include "qtate/quaternion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtate {

Quaternion inverse(const Quaternion& q) {
  const double n = reduced_norm(q);
  if (n == 0.0) throw std::domain_error("inverse: zero quaternion");
  return (1.0 / n) * conj(q);
}

PolarForm polar(const Quaternion& q) {
  const double n = reduced_norm(q);
  if (n == 0.0) throw std::domain_error("polar: zero quaternion has no polar form");
  const double r = std::sqrt(n);
  return {r, (1.0 / r) * q};
}

std::complex<double> character_lambda(const Quaternion& q) {
  const double phase = -4.0 * std::numbers::pi * q.x0;
  return {std::cos(phase), std::sin(phase)};
}

Mat2 matmul(const Mat2& lhs, const Mat2& rhs) {
  return {lhs[0] * rhs[0] + lhs[1] * rhs[2], lhs[0] * rhs[1] + lhs[1] * rhs[3],
          lhs[2] * rhs[0] + lhs[3] * rhs[2], lhs[2] * rhs[1] + lhs[3] * rhs[3]};
}

std::complex<double> det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

MatrixReps matrix_reps(const Quaternion& q) {
  const std::complex<double> a = q.a();
  const std::complex<double> b = q.b();
  return {{a, b, -std::conj(b), std::conj(a)}, {a, -std::conj(b), b, std::conj(a)}};
}

}  // namespace qtate
