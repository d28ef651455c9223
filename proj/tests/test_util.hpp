// Deterministic random generators shared by the test suites.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rka/space.hpp"
#include "rka/types.hpp"

namespace rka::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 1) {}

  double uniform() {  // [0, 1)
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex complex_box(double scale = 1.0) {
    return Complex{uniform(-scale, scale), uniform(-scale, scale)};
  }

  /// Uniform over the disc of the given radius.
  Complex disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double t = 2.0 * 3.14159265358979323846 * uniform();
    return Complex{r * std::cos(t), r * std::sin(t)};
  }

  PowerSeries polynomial(std::size_t length, std::size_t degree, double scale = 1.0) {
    PowerSeries f(length);
    for (std::size_t k = 0; k <= degree && k < length; ++k) f[k] = complex_box(scale);
    return f;
  }

 private:
  std::uint64_t state_;
};

}  // namespace rka::testing
