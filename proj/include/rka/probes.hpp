// Numerical probes for the structural conditions behind interior-solution
// existence: double boundary vanishing (DBVC), boundary vanishing (BVC), the
// vanishing of Gram-Schmidt tails at boundary-bound parameters, and the
// interior margin of solver output.
#pragma once

#include <vector>

#include "rka/dict.hpp"
#include "rka/ortho.hpp"
#include "rka/result.hpp"
#include "rka/space.hpp"

namespace rka {

/// Radial sequence w_j = r_j e^{i theta} with moduli strictly increasing
/// toward 1 (all < 1).
struct BoundarySequence {
  std::vector<double> radii;
  double angle = 0.0;

  /// Dyadic radii 1 - 2^{-j}, j = j_min..j_max, capped strictly below 1.
  static BoundarySequence dyadic(std::size_t j_min, std::size_t j_max, double angle,
                                 double radius_cap = 1.0 - 1e-12);

  std::vector<Complex> points() const;
};

/// |<E_z, E_{w_j}>| for the fixed interior z against the boundary sequence.
/// Evaluated through the closed-form kernel inner product, so the radii may
/// approach 1 beyond the series parameter envelope.
std::vector<double> dbvc_probe(const SpaceSpec& spec, Complex z, const BoundarySequence& seq);

/// |<f, E_{w_j}>| = |f(w_j)| / ||K_{w_j}||, via the reproducing property.
std::vector<double> bvc_probe(const PowerSeries& f, const SpaceSpec& spec,
                              const BoundarySequence& seq);

/// Returned in place of a probe value whose Gram-Schmidt step degenerated.
inline constexpr double kProbeDegenerate = -1.0;

/// |<h, B^{w_j}>| where B^{w_j} is the incremental orthonormal element that
/// extends the fixed tuple's system by w_j. Computed through reproducing
/// evaluations of h and the basis (no kernel series at w_j), so the probe
/// reaches radii past r_max. Degenerate steps yield kProbeDegenerate.
std::vector<double> vanishing_probe(const PowerSeries& h, const SpaceSpec& spec,
                                    const ParameterTuple& fixed_tuple,
                                    const BoundarySequence& seq);

/// r_max minus the largest solved parameter modulus; zero means a parameter
/// ended on the clamp.
double interior_margin(const ApproxResult& result);

}  // namespace rka
