#include "rka/result.hpp"

#include <cmath>
#include <utility>

namespace rka {

ApproxResult assemble_result(const PowerSeries& f, const OrthoSystem& system,
                             std::vector<double> objective_trace) {
  ApproxResult out;
  out.parameters = system.source();
  const ProjectionResult proj = project(f, system);
  const std::size_t n = system.size();
  // Back-substitution: projection = sum_t p_t B_t with B_t = sum_j L_tj E_j,
  // so the slot-j coefficient over the normalized kernel is sum_t p_t L_tj.
  std::vector<Complex> over_normalized(n, Complex{0.0, 0.0});
  const auto& rows = system.expansion_normalized();
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t j = 0; j < rows[t].size(); ++j) {
      over_normalized[j] += proj.coeffs[t] * rows[t][j];
    }
  }
  out.coefficients.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.coefficients[j] = over_normalized[j] / system.kernel_norms()[j];
  }
  out.residual_norm = norm(proj.residual, system.spec());
  out.objective_trace = std::move(objective_trace);
  if (out.objective_trace.empty()) out.objective_trace.push_back(out.residual_norm);
  out.r_max = system.spec().r_max();
  out.interior_margin = out.r_max - out.parameters.max_modulus();
  out.gram_min_eig = system.gram_min_eig();
  return out;
}

ApproxResult assemble_result(const PowerSeries& f, const SpaceSpec& spec,
                             const ParameterTuple& tuple, std::vector<double> objective_trace) {
  return assemble_result(f, gram_schmidt(spec, tuple), std::move(objective_trace));
}

}  // namespace rka
