#pragma once

#include <cstddef>
#include <vector>

namespace qtate {

/// Uniform 1D grid start + i * step, i = 0 .. count-1.
struct UniformGrid {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  /// Symmetric grid [-half_width, half_width] containing 0 as a node.
  /// Throws std::invalid_argument unless half_width / step is a positive integer.
  static UniformGrid centered(double half_width, double step);

  double point(std::size_t i) const { return start + static_cast<double>(i) * step; }
  double front() const { return start; }
  double back() const { return point(count - 1); }
  /// max(|front|, |back|)
  double half_width() const;
  /// True when the grid is symmetric about 0 (so tau -> -tau maps nodes to nodes).
  bool symmetric() const;
  std::vector<double> points() const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

}  // namespace qtate
