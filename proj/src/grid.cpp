#include "qtate/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtate {

UniformGrid UniformGrid::centered(double half_width, double step) {
  if (!(step > 0.0) || !(half_width > 0.0)) {
    throw std::invalid_argument("UniformGrid::centered: width and step must be positive");
  }
  const double cells = half_width / step;
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
    throw std::invalid_argument("UniformGrid::centered: half_width must be a multiple of step");
  }
  const auto half = static_cast<std::size_t>(rounded);
  return {-static_cast<double>(half) * step, step, 2 * half + 1};
}

double UniformGrid::half_width() const {
  if (count == 0) return 0.0;
  return std::max(std::abs(front()), std::abs(back()));
}

bool UniformGrid::symmetric() const {
  if (count == 0) return true;
  return std::abs(front() + back()) <= 1e-12 * std::max(1.0, half_width());
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = point(i);
  return out;
}

}  // namespace qtate
