// Common result record for the greedy and simultaneous solvers.
#pragma once

#include <vector>

#include "rka/dict.hpp"
#include "rka/ortho.hpp"
#include "rka/space.hpp"
#include "rka/types.hpp"

namespace rka {

struct ApproxResult {
  ParameterTuple parameters;
  /// c_1..c_n over the plain multiple kernels of the parameter tuple,
  /// recovered from the orthonormal projection by back-substitution through
  /// the Gram-Schmidt combination matrix.
  std::vector<Complex> coefficients;
  double residual_norm = 0.0;
  std::vector<double> objective_trace;
  double interior_margin = 0.0;  // r_max - max_k |a_k|
  double gram_min_eig = 1.0;
  double r_max = 0.0;
  /// Final objective reached by each start of a multi-start run (empty
  /// otherwise).
  std::vector<double> start_objectives;
  /// Greedy runs log the accepted gain and the grid maximum per step, so the
  /// weak-maximality certificate gain >= rho * max can be re-checked post hoc.
  std::vector<double> selection_gains;
  std::vector<double> grid_best_gains;
};

/// Fill an ApproxResult from an already-built system: project, back-substitute
/// the kernel coefficients, and record the diagnostics.
ApproxResult assemble_result(const PowerSeries& f, const OrthoSystem& system,
                             std::vector<double> objective_trace);

ApproxResult assemble_result(const PowerSeries& f, const SpaceSpec& spec,
                             const ParameterTuple& tuple, std::vector<double> objective_trace);

}  // namespace rka
