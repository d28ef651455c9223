// rho-Weak-POAFD: iterative parameter selection by (near-)maximal incremental
// energy over a polar candidate grid.
#pragma once

#include <cstddef>

#include "rka/grid.hpp"
#include "rka/ortho.hpp"
#include "rka/result.hpp"
#include "rka/space.hpp"

namespace rka {

struct GreedyConfig {
  double rho = 1.0;  // in (0,1]; 1 selects the grid argmax (POAFD)
  PolarGrid grid;
  std::size_t n_terms = 1;
  double delta = kDefaultMergeDelta;  // exclusion distance around chosen parameters
  double residual_stop = 1e-12;
  /// Local Nelder-Mead polish around the grid argmax; applies only at rho=1.
  bool refine = true;
};

GreedyConfig default_greedy_config(const SpaceSpec& spec, std::size_t n_terms);

/// |<f, B^b_{n+1}>| where B^b is the incremental orthonormal element at b.
/// Equals |<residual, E_b>| / denom, so passing f or its current residual
/// gives the same value. DegenerateSystem propagates from extend.
double energy_gain(const PowerSeries& f, const OrthoSystem& system, Complex b);

struct Selection {
  Complex point{0.0, 0.0};
  double gain = 0.0;
  double grid_best_gain = 0.0;  // max over admissible grid points
  std::size_t radial_index = 0;
  std::size_t angular_index = 0;
};

/// Pick the next parameter: at rho=1 the grid argmax (ties broken by smallest
/// radial then angular index), optionally polished; at rho<1 the first grid
/// point in index order whose gain reaches rho times the grid maximum.
/// Grid points within delta of already-selected parameters are excluded;
/// throws EmptyGrid if nothing remains.
Selection select_next(const PowerSeries& f, const OrthoSystem& system, const GreedyConfig& cfg);

/// Run n_terms selection/extension steps and report parameters, kernel
/// coefficients, and the residual-norm trajectory.
ApproxResult poafd(const PowerSeries& f, const SpaceSpec& spec, const GreedyConfig& cfg);

}  // namespace rka
