#include "rka/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rka/optim.hpp"

namespace rka {

namespace {

void validate_config(const GreedyConfig& cfg, const SpaceSpec& spec) {
  detail::require(cfg.rho > 0.0 && cfg.rho <= 1.0, "GreedyConfig: rho must lie in (0,1]");
  detail::require(cfg.grid.radii.size() >= 4 && cfg.grid.angular >= 4,
                  "GreedyConfig: grid counts must be >= 4");
  detail::require(cfg.grid.max_radius() <= spec.r_max(),
                  "GreedyConfig: grid radii must not exceed r_max");
  detail::require(cfg.delta > 0.0, "GreedyConfig: delta must be positive");
}

bool excluded(Complex b, const ParameterTuple& chosen, double delta) {
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    if (std::abs(b - chosen.point(j)) <= delta) return true;
  }
  return false;
}

// Scan-speed route to the incremental gain: |<g, E_b>| / denom with the
// residual g projected out once, every per-candidate quantity a Horner
// evaluation (reproducing property), and the kernel normalized by its series
// norm so the value matches the extend-based energy_gain to rounding.
class GainEvaluator {
 public:
  GainEvaluator(const PowerSeries& f, const OrthoSystem& system)
      : system_(system), residual_(project(f, system).residual) {}

  // negative return means the candidate is numerically degenerate
  double operator()(Complex b) const {
    const SpaceSpec& spec = system_.spec();
    const std::vector<double>& h = spec.weights();
    const double r2 = std::norm(b);
    double norm2 = 0.0, pw = 1.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      norm2 += pw / h[k];
      pw *= r2;
    }
    double proj2 = 0.0;
    for (std::size_t t = 0; t < system_.size(); ++t) {
      proj2 += std::norm(evaluate(system_.basis(t), b));
    }
    const double denom2 = 1.0 - proj2 / norm2;
    if (!(denom2 > kDefaultLicFloor * kDefaultLicFloor)) return -1.0;
    return std::abs(evaluate(residual_, b)) / std::sqrt(norm2 * denom2);
  }

 private:
  const OrthoSystem& system_;
  PowerSeries residual_;
};

}  // namespace

GreedyConfig default_greedy_config(const SpaceSpec& spec, std::size_t n_terms) {
  GreedyConfig cfg;
  cfg.grid = PolarGrid::chebyshev(64, 128, spec.r_max());
  cfg.n_terms = n_terms;
  return cfg;
}

double energy_gain(const PowerSeries& f, const OrthoSystem& system, Complex b) {
  const ExtendResult ext = extend(system, b);
  return std::abs(inner_product(f, ext.next, system.spec()));
}

Selection select_next(const PowerSeries& f, const OrthoSystem& system, const GreedyConfig& cfg) {
  validate_config(cfg, system.spec());
  const ParameterTuple& chosen = system.source();
  const GainEvaluator gain_of(f, system);
  const std::size_t nr = cfg.grid.radii.size();
  const std::size_t na = cfg.grid.angular;
  std::vector<double> gains(nr * na, -1.0);

  double best = -1.0;
  std::size_t best_i = 0, best_j = 0;
  std::size_t admissible = 0;
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex b = cfg.grid.point(i, j);
      if (excluded(b, chosen, cfg.delta)) continue;
      ++admissible;
      const double g = gain_of(b);
      if (g < 0.0) continue;
      gains[i * na + j] = g;
      if (g > best) {
        best = g;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (admissible == 0 || best < 0.0) {
    throw EmptyGrid("select_next: no admissible grid point remains");
  }

  Selection sel;
  sel.grid_best_gain = best;
  if (cfg.rho < 1.0) {
    const double bar = cfg.rho * best;
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < na; ++j) {
        const double g = gains[i * na + j];
        if (g >= 0.0 && g >= bar) {
          sel.point = cfg.grid.point(i, j);
          sel.gain = g;
          sel.radial_index = i;
          sel.angular_index = j;
          return sel;
        }
      }
    }
  }

  sel.point = cfg.grid.point(best_i, best_j);
  sel.gain = best;
  sel.radial_index = best_i;
  sel.angular_index = best_j;
  if (cfg.refine) {
    const double r_max = system.spec().r_max();
    auto gain_at = [&](Complex b) -> double {
      b = clamp_modulus(b, r_max);
      if (excluded(b, chosen, cfg.delta)) return -1.0;
      return gain_of(b);
    };
    NelderMeadOptions opts;
    opts.initial_step = 0.5 * cfg.grid.spacing_near(cfg.grid.radii[best_i]);
    opts.tol = 1e-12;
    opts.max_iters = 250;
    auto [point, gain] = nelder_mead_max(gain_at, sel.point, opts);
    point = clamp_modulus(point, r_max);
    if (gain > sel.gain && !excluded(point, chosen, cfg.delta)) {
      sel.point = point;
      sel.gain = gain;
    }
  }
  return sel;
}

ApproxResult poafd(const PowerSeries& f, const SpaceSpec& spec, const GreedyConfig& cfg) {
  detail::require(cfg.n_terms >= 1, "poafd: n_terms must be >= 1");
  OrthoSystem system = OrthoSystem::empty(spec);
  std::vector<double> trace{norm(f, spec)};
  std::vector<double> gains, grid_bests;
  for (std::size_t step = 0; step < cfg.n_terms; ++step) {
    if (trace.back() < cfg.residual_stop) break;
    const Selection sel = select_next(f, system, cfg);
    system = system.extended(sel.point, kDefaultLicFloor, cfg.delta);
    trace.push_back(norm(project(f, system).residual, spec));
    gains.push_back(sel.gain);
    grid_bests.push_back(sel.grid_best_gain);
  }
  ApproxResult res = assemble_result(f, system, std::move(trace));
  res.selection_gains = std::move(gains);
  res.grid_best_gains = std::move(grid_bests);
  return res;
}

}  // namespace rka
