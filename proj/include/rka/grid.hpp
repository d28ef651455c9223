// Polar candidate grids over the parameter disc.
#pragma once

#include <cstddef>
#include <vector>

#include "rka/types.hpp"

namespace rka {

/// Radii (ascending) crossed with uniformly spaced angles 2*pi*j/angular.
/// Index order (radial outer, angular inner) is the deterministic
/// tie-breaking order everywhere grids are scanned.
struct PolarGrid {
  std::vector<double> radii;
  std::size_t angular = 0;

  /// Chebyshev-spaced radii on [0, r_max]: resolution clusters both near the
  /// origin and near the admissible boundary, where kernels localize.
  static PolarGrid chebyshev(std::size_t radial, std::size_t angular, double r_max);

  Complex point(std::size_t radial_index, std::size_t angular_index) const;
  std::size_t size() const { return radii.size() * angular; }
  double max_radius() const;

  /// Approximate local spacing around a radius, for seeding refinement steps.
  double spacing_near(double r) const;
};

}  // namespace rka
