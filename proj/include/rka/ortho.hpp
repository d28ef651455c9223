// Gram-Schmidt orthonormalization of multiple-kernel tuples, projections,
// the Hardy Takenaka-Malmquist closed form, and the linear-independence
// diagnostic.
#pragma once

#include <cstddef>
#include <vector>

#include "rka/dict.hpp"
#include "rka/space.hpp"
#include "rka/types.hpp"

namespace rka {

/// Normalization denominators below this are treated as a numerically
/// violated linear-independence condition rather than rounding noise.
inline constexpr double kDefaultLicFloor = 1e-8;

/// Orthonormal system B_1..B_n spanning the multiple kernels of a parameter
/// tuple, with the lower-triangular combination matrix that produced it.
/// Immutable after construction.
class OrthoSystem {
 public:
  static OrthoSystem build(const SpaceSpec& spec, const ParameterTuple& tuple,
                           double lic_floor = kDefaultLicFloor);
  static OrthoSystem empty(const SpaceSpec& spec);

  const SpaceSpec& spec() const { return spec_; }
  const ParameterTuple& source() const { return source_; }
  std::size_t size() const { return basis_.size(); }
  const PowerSeries& basis(std::size_t t) const { return basis_[t]; }
  const std::vector<PowerSeries>& basis() const { return basis_; }

  /// Row t expresses B_t over the normalized multiple kernels E_1..E_t.
  const std::vector<std::vector<Complex>>& expansion_normalized() const {
    return expansion_;
  }
  /// Series norms of the unnormalized multiple kernels, per slot.
  const std::vector<double>& kernel_norms() const { return kernel_norms_; }

  /// Lower-triangular matrix expressing each B_t over the plain (unnormalized)
  /// multiple kernels.
  std::vector<std::vector<Complex>> coeff_matrix() const;

  /// Smallest eigenvalue of the normalized-kernel Gram matrix; > 0 certifies
  /// numerical linear independence of the tuple's kernels.
  double gram_min_eig() const { return gram_min_eig_; }

  /// New system with the kernel at b appended (existing elements unchanged).
  /// An exact repeat of a source point appends the next-order derivative
  /// kernel; a near-repeat within merge_delta is rejected as degenerate.
  OrthoSystem extended(Complex b, double lic_floor = kDefaultLicFloor,
                       double merge_delta = kDefaultMergeDelta) const;

 private:
  explicit OrthoSystem(const SpaceSpec& spec) : spec_(spec) {}

  SpaceSpec spec_;
  ParameterTuple source_;
  std::vector<PowerSeries> basis_;
  std::vector<std::vector<Complex>> expansion_;
  std::vector<double> kernel_norms_;
  double gram_min_eig_ = 1.0;
};

/// Sequential quotient construction over the tuple's multiple kernels.
/// Throws DegenerateSystem when a normalization denominator falls below
/// lic_floor.
OrthoSystem gram_schmidt(const SpaceSpec& spec, const ParameterTuple& tuple,
                         double lic_floor = kDefaultLicFloor);

/// Explicit Takenaka-Malmquist system for a distinct-parameter Hardy tuple:
/// B_k(z) = sqrt(1-|w_k|^2)/(1 - conj(w_k) z) * prod_{l<k} (z-w_l)/(1-conj(w_l) z),
/// expanded to truncated series. Oracle for gram_schmidt, built directly from
/// the closed form.
std::vector<PowerSeries> tm_closed_form(const SpaceSpec& spec, const ParameterTuple& tuple);

struct ProjectionResult {
  std::vector<Complex> coeffs;  // <f, B_t>
  PowerSeries residual;         // f - sum coeffs_t B_t
};

ProjectionResult project(const PowerSeries& f, const OrthoSystem& system);

/// Gram matrix of the tuple's normalized multiple kernels (row i, column j
/// holds <E_i, E_j>): Hermitian, unit diagonal, positive semidefinite.
std::vector<std::vector<Complex>> gram_matrix(const SpaceSpec& spec,
                                              const ParameterTuple& tuple);

/// Minimum eigenvalue of the Gram matrix of the tuple's normalized multiple
/// kernels. Callers threshold the returned value.
double lic_check(const SpaceSpec& spec, const ParameterTuple& tuple);

struct ExtendResult {
  PowerSeries next;       // incremental orthonormal element B^b
  double denom = 1.0;     // sqrt(1 - sum |<E_b, B_t>|^2), in (0, 1]
  std::size_t order = 0;  // derivative order used for b (multiplicity - 1)
};

/// Incremental orthonormal element for one extra parameter, without
/// rebuilding the system. Same degeneracy rules as OrthoSystem::extended.
ExtendResult extend(const OrthoSystem& system, Complex b,
                    double lic_floor = kDefaultLicFloor,
                    double merge_delta = kDefaultMergeDelta);

}  // namespace rka
