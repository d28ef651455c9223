// Simultaneous n-best kernel approximation: minimize the projection residual
// A(f;a) over n-tuples of disc parameters by multi-start cyclic coordinate
// descent with a joint finite-difference gradient polish, plus an exhaustive
// grid oracle for small n.
#pragma once

#include <cstddef>
#include <cstdint>

#include "rka/dict.hpp"
#include "rka/grid.hpp"
#include "rka/result.hpp"
#include "rka/space.hpp"

namespace rka {

struct NBestConfig {
  std::size_t n = 1;
  std::size_t starts = 8;
  PolarGrid grid;                // coordinate-scan grid, also the start-sampling domain
  double tol_obj = 1e-12;        // stop a cycle pass when A^2 improves by less
  std::size_t max_cycles = 50;
  double fd_step = 1e-5;         // central-difference step of the joint polish
  double delta = kDefaultMergeDelta;
  std::uint64_t seed = 0;
  std::size_t max_refine_iters = 1200;  // objective evaluations of the joint polish
  bool parallel_starts = true;   // starts are independent; reduction is by (objective, index)
};

NBestConfig default_nbest_config(const SpaceSpec& spec, std::size_t n);

/// A(f;a): norm of the residual after projecting f onto the orthonormalized
/// multiple kernels of the tuple. Throws DegenerateSystem when the tuple's
/// kernels are numerically dependent.
double objective(const PowerSeries& f, const SpaceSpec& spec, const ParameterTuple& tuple);

/// Exhaustive minimum over all unordered n-subsets of the grid, repetition
/// meaning raised multiplicity. Independent route: closed-form kernel Gram
/// matrices and derivative-reproducing evaluations of f, no series
/// Gram-Schmidt. n <= 3 and grid^n <= 1e7 enforced (BudgetExceeded).
ApproxResult brute_force(const PowerSeries& f, const SpaceSpec& spec, std::size_t n,
                         const PolarGrid& grid);

/// Coordinate descent from tuple0: each parameter in turn is re-selected by a
/// grid scan plus local polish with the others fixed, until a full cycle
/// improves the squared objective by less than tol_obj; then a projected
/// gradient pass over all parameter coordinates (central differences,
/// parameters clamped to |a| <= r_max, near-coincidences merged every step).
ApproxResult cyclic_descent(const PowerSeries& f, const SpaceSpec& spec,
                            const ParameterTuple& tuple0, const NBestConfig& cfg);

/// Multi-start driver: one greedy (POAFD) start plus seeded pseudo-random
/// starts; returns the best descent outcome (ties to the lower start index)
/// with per-start objectives recorded in the diagnostics.
ApproxResult solve(const PowerSeries& f, const SpaceSpec& spec, const NBestConfig& cfg);

}  // namespace rka
