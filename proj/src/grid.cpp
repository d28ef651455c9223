#include "rka/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rka {

PolarGrid PolarGrid::chebyshev(std::size_t radial, std::size_t angular, double r_max) {
  detail::require(radial >= 4 && angular >= 4, "PolarGrid: counts must be >= 4");
  detail::require(r_max > 0.0 && r_max < 1.0, "PolarGrid: r_max must lie in (0,1)");
  PolarGrid g;
  g.angular = angular;
  g.radii.resize(radial);
  for (std::size_t i = 0; i < radial; ++i) {
    const double t = std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(radial);
    g.radii[i] = 0.5 * r_max * (1.0 - std::cos(t));
  }
  return g;
}

Complex PolarGrid::point(std::size_t radial_index, std::size_t angular_index) const {
  const double r = radii[radial_index];
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(angular_index) / static_cast<double>(angular);
  return Complex{r * std::cos(theta), r * std::sin(theta)};
}

double PolarGrid::max_radius() const {
  double m = 0.0;
  for (double r : radii) m = std::max(m, r);
  return m;
}

double PolarGrid::spacing_near(double r) const {
  double radial_gap = radii.size() > 1 ? radii.back() / static_cast<double>(radii.size()) : 0.1;
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (r >= radii[i] && r <= radii[i + 1]) {
      radial_gap = radii[i + 1] - radii[i];
      break;
    }
  }
  const double angular_gap =
      2.0 * std::numbers::pi * std::max(r, 1e-3) / static_cast<double>(angular);
  return std::max(radial_gap, angular_gap);
}

}  // namespace rka
