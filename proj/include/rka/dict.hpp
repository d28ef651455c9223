// Parameterized dictionary elements: reproducing kernels K_w, their
// derivatives in conj(w) ("multiple kernels", used when a parameter repeats),
// and normalized versions, plus tuple multiplicity bookkeeping.
#pragma once

#include <cstddef>
#include <vector>

#include "rka/space.hpp"
#include "rka/types.hpp"

namespace rka {

/// Default snapping distance below which two parameters are treated as one
/// point of raised multiplicity: under typical optimizer step resolution,
/// well above rounding noise.
inline constexpr double kDefaultMergeDelta = 1e-6;

/// Ordered tuple (a_1,...,a_n) of disc points. The multiplicity of the k-th
/// entry is the number of occurrences of a_k among a_1..a_k (exact complex
/// equality; merge_close snaps nearby points to make that meaningful).
class ParameterTuple {
 public:
  ParameterTuple() = default;
  explicit ParameterTuple(std::vector<Complex> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  Complex point(std::size_t k) const { return points_[k]; }
  const std::vector<Complex>& points() const { return points_; }

  /// l(a_k): occurrences of a_k among the first k+1 entries; >= 1.
  std::size_t multiplicity(std::size_t k) const { return multiplicities_[k]; }
  const std::vector<std::size_t>& multiplicities() const { return multiplicities_; }

  /// Derivative order of the multiple kernel attached to slot k: l(a_k) - 1.
  std::size_t order(std::size_t k) const { return multiplicities_[k] - 1; }

  double max_modulus() const;

  ParameterTuple with_appended(Complex b) const;
  ParameterTuple without(std::size_t k) const;
  ParameterTuple with_replaced(std::size_t k, Complex b) const;

 private:
  std::vector<Complex> points_;
  std::vector<std::size_t> multiplicities_;
};

/// Snap any delta-cluster of points to its centroid so repeated parameters
/// become exact repeats and the multiplicity rule applies. Clustering is
/// transitive (union of delta-links); entry order and count are preserved.
ParameterTuple merge_close(const ParameterTuple& tuple, double delta);

/// (d/d conj(w))^order K_w as a truncated series, together with its origin.
struct MultipleKernel {
  Complex parameter{0.0, 0.0};
  std::size_t order = 0;
  PowerSeries series;
};

/// The multiple reproducing kernel at w of the given derivative order.
/// order = 0 gives the plain kernel; coefficient k of the series is
/// k(k-1)...(k-order+1) conj(w)^{k-order} / h_k for k >= order, else 0.
MultipleKernel kernel(const SpaceSpec& spec, Complex w, std::size_t order = 0);

/// Kernel divided by its (series) norm; resulting norm is 1 to rounding.
/// Computed through a rescaled recurrence so it stays finite even where the
/// unnormalized coefficients would overflow.
MultipleKernel normalized_kernel(const SpaceSpec& spec, Complex w, std::size_t order = 0);

/// <K_v, K_w> = K_v(w) in closed form: (1 - conj(v) w)^{-s} with the space's
/// kernel exponent s. Valid for any v, w in the open disc (no truncation).
Complex kernel_inner(const SpaceSpec& spec, Complex v, Complex w);

/// Closed form of <d^mv K_v / d conj(v)^mv, d^mw K_w / d conj(w)^mw>,
/// i.e. the mixed derivative of (1 - conj(v) w)^{-s} in conj(v) and w.
Complex kernel_inner_derivative(const SpaceSpec& spec, Complex v, std::size_t mv,
                                Complex w, std::size_t mw);

/// Closed-form norm of the multiple kernel at w of the given order.
double kernel_norm_closed(const SpaceSpec& spec, Complex w, std::size_t order = 0);

}  // namespace rka
