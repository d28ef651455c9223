// Basic scalar types and error categories shared across the library.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace rka {

using Complex = std::complex<double>;

/// Radial projection onto the closed disc of radius r_max. The result is
/// guaranteed to satisfy |a| <= r_max even after rounding.
inline Complex clamp_modulus(Complex a, double r_max) {
  const double r = std::abs(a);
  if (r <= r_max) return a;
  a *= r_max / r;
  while (std::abs(a) > r_max) a *= 0.9999999999999999;
  return a;
}

/// Thrown when a Gram-Schmidt normalization denominator collapses below the
/// linear-independence floor, i.e. the kernel being appended is numerically
/// inside the span of the already orthonormalized ones.
class DegenerateSystem : public std::runtime_error {
 public:
  explicit DegenerateSystem(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a candidate grid becomes empty after exclusion rules.
class EmptyGrid : public std::runtime_error {
 public:
  explicit EmptyGrid(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by conversions that require pairwise-distinct parameters.
class DegenerateTuple : public std::runtime_error {
 public:
  explicit DegenerateTuple(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

}  // namespace rka
