// Small derivative-free maximizer used to polish grid selections.
#pragma once

#include <functional>
#include <utility>

#include "rka/types.hpp"

namespace rka {

struct NelderMeadOptions {
  double initial_step = 1e-2;
  double tol = 1e-11;       // simplex diameter at which to stop
  std::size_t max_iters = 200;
};

/// Nelder-Mead over the plane (Re, Im), maximizing fn. The objective may
/// return a large negative value to veto a point (domain constraints are
/// handled by rejection). Deterministic for a fixed start.
std::pair<Complex, double> nelder_mead_max(const std::function<double(Complex)>& fn,
                                           Complex start, const NelderMeadOptions& opts = {});

}  // namespace rka
