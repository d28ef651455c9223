#include "rka/nbest.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "rka/greedy.hpp"
#include "rka/ortho.hpp"

namespace rka {

namespace {

void validate_config(const NBestConfig& cfg, const SpaceSpec& spec) {
  detail::require(cfg.n >= 1, "NBestConfig: n must be >= 1");
  detail::require(cfg.starts >= 1, "NBestConfig: starts must be >= 1");
  detail::require(cfg.tol_obj > 0.0, "NBestConfig: tol_obj must be positive");
  detail::require(cfg.fd_step > 1e-9 && cfg.fd_step < 1e-3,
                  "NBestConfig: fd_step must lie in (1e-9, 1e-3)");
  detail::require(cfg.delta > 0.0, "NBestConfig: delta must be positive");
  detail::require(cfg.grid.radii.size() >= 4 && cfg.grid.angular >= 4,
                  "NBestConfig: grid counts must be >= 4");
  detail::require(cfg.grid.max_radius() <= spec.r_max(),
                  "NBestConfig: grid radii must not exceed r_max");
}

Complex clamp_to_disc(Complex a, double r_max) { return clamp_modulus(a, r_max); }

// Objective with merge-escalation recovery: a numerically dependent tuple is
// coarsened into multiplicities until the Gram-Schmidt succeeds.
double objective_recovering(const PowerSeries& f, const SpaceSpec& spec, ParameterTuple& tuple,
                            double delta) {
  double d = delta;
  for (int attempt = 0; attempt < 6; ++attempt) {
    try {
      return objective(f, spec, tuple);
    } catch (const DegenerateSystem&) {
      d *= 10.0;
      tuple = merge_close(tuple, d);
    }
  }
  return objective(f, spec, tuple);  // propagate if still degenerate
}

// Deterministic uniform doubles in [0,1) from a seeded 64-bit stream;
// distribution classes are implementation-defined, this is not.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double next() {
    // splitmix64 step
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  Complex disc_point(double r_max) {
    const double r = r_max * std::sqrt(next());
    const double theta = 2.0 * std::numbers::pi * next();
    return Complex{r * std::cos(theta), r * std::sin(theta)};
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Joint polish: projected gradient descent on the squared objective over the
// distinct parameter points (a merged point moves as one coordinate pair),
// with central finite differences and an adaptive step.
// ---------------------------------------------------------------------------

std::vector<Complex> distinct_points(const ParameterTuple& tuple) {
  std::vector<Complex> u;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (std::find(u.begin(), u.end(), tuple.point(k)) == u.end()) u.push_back(tuple.point(k));
  }
  return u;
}

ParameterTuple tuple_from_distinct(const ParameterTuple& pattern,
                                   const std::vector<Complex>& old_u,
                                   const std::vector<Complex>& new_u, double r_max) {
  std::vector<Complex> pts(pattern.size());
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const auto it = std::find(old_u.begin(), old_u.end(), pattern.point(k));
    pts[k] = clamp_to_disc(new_u[static_cast<std::size_t>(it - old_u.begin())], r_max);
  }
  return ParameterTuple(std::move(pts));
}

double objective_sq_or_inf(const PowerSeries& f, const SpaceSpec& spec,
                           const ParameterTuple& tuple) {
  try {
    const double a = objective(f, spec, tuple);
    return a * a;
  } catch (const DegenerateSystem&) {
    return std::numeric_limits<double>::infinity();
  }
}

void joint_refine(const PowerSeries& f, const SpaceSpec& spec, const NBestConfig& cfg,
                  ParameterTuple& tuple, double& obj2) {
  const double r_max = spec.r_max();
  double step = 0.02;
  std::size_t iters = 0;
  std::vector<Complex> prev_u, prev_grad;
  while (iters < cfg.max_refine_iters) {
    const std::vector<Complex> u = distinct_points(tuple);
    const std::size_t m = u.size();
    if (prev_u.size() != m) {  // a merge changed the coordinate chart
      prev_u.clear();
      prev_grad.clear();
    }
    // Tighten the difference step once the residual is small; the quadratic
    // bowl near an exact-recovery optimum needs a finer probe than fd_step.
    const double h = obj2 > 1e-8 ? cfg.fd_step : std::max(cfg.fd_step * 1e-2, 1e-8);

    std::vector<Complex> grad(m, Complex{0.0, 0.0});
    double grad_norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (int comp = 0; comp < 2; ++comp) {
        const Complex dir = comp == 0 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
        std::vector<Complex> up = u, um = u;
        up[i] += h * dir;
        um[i] -= h * dir;
        const double fp =
            objective_sq_or_inf(f, spec, tuple_from_distinct(tuple, u, up, r_max));
        const double fm =
            objective_sq_or_inf(f, spec, tuple_from_distinct(tuple, u, um, r_max));
        if (!std::isfinite(fp) || !std::isfinite(fm)) continue;
        const double g = (fp - fm) / (2.0 * h);
        grad[i] += g * dir;
        grad_norm2 += g * g;
      }
      ++iters;
    }
    if (grad_norm2 < 1e-28) break;

    // Barzilai-Borwein spectral step between consecutive iterates; it adapts
    // to the curvature far better than a growth/backtrack ladder on the flat,
    // ill-conditioned bowls near coalescing parameters.
    if (!prev_u.empty()) {
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const Complex dx = u[i] - prev_u[i];
        const Complex dg = grad[i] - prev_grad[i];
        num += (dx * std::conj(dg)).real();
        den += std::norm(dg);
      }
      if (den > 0.0 && num > 0.0) step = std::min(num / den, 1e6);
    }

    bool accepted = false;
    while (step >= 1e-13) {
      std::vector<Complex> trial = u;
      for (std::size_t i = 0; i < m; ++i) trial[i] -= step * grad[i];
      ParameterTuple t = tuple_from_distinct(tuple, u, trial, r_max);
      t = merge_close(t, cfg.delta);
      const double cand = objective_sq_or_inf(f, spec, t);
      ++iters;
      if (cand < obj2) {
        tuple = std::move(t);
        obj2 = cand;
        prev_u = u;
        prev_grad = grad;
        step = std::min(step * 1.4, 256.0);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
}

// ---------------------------------------------------------------------------
// Brute-force oracle internals
// ---------------------------------------------------------------------------

struct OraclePoint {
  Complex w;
  std::vector<Complex> f_deriv;  // f^{(m)}(w), m = 0..n-1
  std::vector<double> knorm;     // closed-form multiple-kernel norms
};

}  // namespace

NBestConfig default_nbest_config(const SpaceSpec& spec, std::size_t n) {
  NBestConfig cfg;
  cfg.n = n;
  cfg.grid = PolarGrid::chebyshev(32, 64, spec.r_max());
  return cfg;
}

double objective(const PowerSeries& f, const SpaceSpec& spec, const ParameterTuple& tuple) {
  const OrthoSystem sys = gram_schmidt(spec, tuple);
  return norm(project(f, sys).residual, spec);
}

ApproxResult brute_force(const PowerSeries& f, const SpaceSpec& spec, std::size_t n,
                         const PolarGrid& grid) {
  detail::require(n >= 1 && n <= 3, "brute_force: n must be 1, 2 or 3");
  detail::require(grid.max_radius() <= spec.r_max(), "brute_force: grid beyond r_max");
  const double combos = std::pow(static_cast<double>(grid.size()), static_cast<double>(n));
  if (!(combos <= 1e7)) {
    throw BudgetExceeded("brute_force: grid^n exceeds the 1e7 evaluation budget");
  }

  std::vector<OraclePoint> pts;
  pts.reserve(grid.size());
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    for (std::size_t j = 0; j < grid.angular; ++j) {
      OraclePoint p;
      p.w = grid.point(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        p.f_deriv.push_back(evaluate_derivative(f, p.w, m));
        p.knorm.push_back(kernel_norm_closed(spec, p.w, m));
      }
      pts.push_back(std::move(p));
    }
  }

  const double f2 = [&] {
    const double nf = norm(f, spec);
    return nf * nf;
  }();

  double best_obj2 = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_idx;

  std::vector<std::size_t> idx(n, 0);
  Eigen::MatrixXcd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::VectorXcd u(static_cast<Eigen::Index>(n));

  auto eval_multiset = [&](const std::vector<std::size_t>& ms) {
    // Repeated grid indices raise the derivative order, mirroring the tuple
    // multiplicity convention.
    std::vector<std::size_t> order(ms.size(), 0);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        if (ms[j] == ms[k]) ++order[k];
      }
    }
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const OraclePoint& pk = pts[ms[k]];
      u(static_cast<Eigen::Index>(k)) = pk.f_deriv[order[k]] / pk.knorm[order[k]];
      for (std::size_t l = 0; l <= k; ++l) {
        const OraclePoint& pl = pts[ms[l]];
        const Complex inner =
            kernel_inner_derivative(spec, pl.w, order[l], pk.w, order[k]) /
            (pk.knorm[order[k]] * pl.knorm[order[l]]);
        g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = inner;
        g(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) = std::conj(inner);
      }
    }
    const auto ldlt = g.ldlt();
    const auto d = ldlt.vectorD();
    double dmin = std::numeric_limits<double>::infinity(), dmax = 0.0;
    for (Eigen::Index k = 0; k < d.size(); ++k) {
      dmin = std::min(dmin, std::abs(d(k).real()));
      dmax = std::max(dmax, std::abs(d(k).real()));
    }
    if (!(dmin > 1e-12 * dmax)) return;  // numerically dependent near-duplicates
    const Eigen::VectorXcd x = ldlt.solve(u);
    const double energy = (u.adjoint() * x).real()(0, 0);
    // a projection energy cannot exceed ||f||^2; anything above it is a
    // conditioning artifact, not a candidate minimum
    if (!(energy <= f2 * (1.0 + 1e-9) + 1e-12)) return;
    const double obj2 = f2 - energy;
    if (obj2 < best_obj2) {
      best_obj2 = obj2;
      best_idx = ms;
    }
  };

  // Enumerate sorted index multisets i_1 <= ... <= i_n.
  const std::size_t P = pts.size();
  if (n == 1) {
    for (idx[0] = 0; idx[0] < P; ++idx[0]) eval_multiset(idx);
  } else if (n == 2) {
    for (idx[0] = 0; idx[0] < P; ++idx[0]) {
      for (idx[1] = idx[0]; idx[1] < P; ++idx[1]) eval_multiset(idx);
    }
  } else {
    for (idx[0] = 0; idx[0] < P; ++idx[0]) {
      for (idx[1] = idx[0]; idx[1] < P; ++idx[1]) {
        for (idx[2] = idx[1]; idx[2] < P; ++idx[2]) eval_multiset(idx);
      }
    }
  }
  detail::require(!best_idx.empty(), "brute_force: no admissible grid multiset");

  std::vector<Complex> chosen;
  chosen.reserve(n);
  for (std::size_t k : best_idx) chosen.push_back(pts[k].w);
  const double oracle_value = std::sqrt(std::max(0.0, best_obj2));
  return assemble_result(f, spec, ParameterTuple(std::move(chosen)), {oracle_value});
}

ApproxResult cyclic_descent(const PowerSeries& f, const SpaceSpec& spec,
                            const ParameterTuple& tuple0, const NBestConfig& cfg) {
  validate_config(cfg, spec);
  detail::require(tuple0.size() >= 1, "cyclic_descent: empty start tuple");
  detail::require(tuple0.max_modulus() <= spec.r_max(),
                  "cyclic_descent: start tuple beyond r_max");

  ParameterTuple tuple = merge_close(tuple0, cfg.delta);
  // Coincident starts are separated slightly; multiplicity configurations are
  // reachable again through the descent itself.
  {
    std::vector<Complex> pts = tuple.points();
    bool perturbed = false;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (tuple.multiplicity(k) > 1) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(tuple.size());
        pts[k] = clamp_to_disc(
            pts[k] + 10.0 * cfg.delta * Complex{std::cos(theta), std::sin(theta)},
            spec.r_max());
        perturbed = true;
      }
    }
    if (perturbed) tuple = merge_close(ParameterTuple(std::move(pts)), cfg.delta);
  }

  double obj = objective_recovering(f, spec, tuple, cfg.delta);
  std::vector<double> trace{obj};

  GreedyConfig scan;
  scan.rho = 1.0;
  scan.grid = cfg.grid;
  scan.n_terms = 1;
  scan.delta = cfg.delta;
  scan.refine = true;

  const std::size_t n = tuple.size();
  for (std::size_t cycle = 0; cycle < cfg.max_cycles; ++cycle) {
    for (std::size_t k = 0; k < n; ++k) {
      try {
        const ParameterTuple fixed = tuple.without(k);
        const OrthoSystem sys = gram_schmidt(spec, fixed);
        Selection sel;
        try {
          sel = select_next(f, sys, scan);
        } catch (const EmptyGrid&) {
          continue;
        }
        ParameterTuple candidate = merge_close(tuple.with_replaced(k, sel.point), cfg.delta);
        const double cand_obj = objective(f, spec, candidate);
        if (cand_obj <= obj) {
          tuple = std::move(candidate);
          obj = cand_obj;
        }
      } catch (const DegenerateSystem&) {
        tuple = merge_close(tuple, 10.0 * cfg.delta);
        obj = objective_recovering(f, spec, tuple, cfg.delta);
      }
    }
    trace.push_back(obj);
    const double prev = trace[trace.size() - 2];
    if (prev * prev - obj * obj < cfg.tol_obj) break;
  }

  double obj2 = obj * obj;
  joint_refine(f, spec, cfg, tuple, obj2);
  trace.push_back(std::sqrt(std::max(0.0, obj2)));

  ApproxResult res = assemble_result(f, spec, tuple, std::move(trace));
  return res;
}

ApproxResult solve(const PowerSeries& f, const SpaceSpec& spec, const NBestConfig& cfg) {
  validate_config(cfg, spec);
  detail::require(norm(f, spec) > 0.0, "solve: target must be nonzero");

  Uniform rng(cfg.seed);
  std::vector<ParameterTuple> starts;
  starts.reserve(cfg.starts);

  // Start 1: the greedy tuple, padded with random draws if the greedy loop
  // stopped early on a tiny residual.
  {
    GreedyConfig g;
    g.rho = 1.0;
    g.grid = cfg.grid;
    g.n_terms = cfg.n;
    g.delta = cfg.delta;
    g.refine = true;
    std::vector<Complex> pts;
    try {
      pts = poafd(f, spec, g).parameters.points();
    } catch (const EmptyGrid&) {
      pts.clear();
    }
    while (pts.size() < cfg.n) pts.push_back(rng.disc_point(spec.r_max()));
    starts.emplace_back(std::move(pts));
  }
  for (std::size_t s = 1; s < cfg.starts; ++s) {
    std::vector<Complex> pts;
    pts.reserve(cfg.n);
    for (std::size_t k = 0; k < cfg.n; ++k) pts.push_back(rng.disc_point(spec.r_max()));
    starts.emplace_back(std::move(pts));
  }

  auto run_start = [&](const ParameterTuple& t) { return cyclic_descent(f, spec, t, cfg); };

  std::vector<std::optional<ApproxResult>> outcomes(starts.size());
  if (cfg.parallel_starts && starts.size() > 1) {
    std::vector<std::future<ApproxResult>> futures;
    futures.reserve(starts.size());
    for (const ParameterTuple& t : starts) {
      futures.push_back(std::async(std::launch::async, run_start, t));
    }
    for (std::size_t s = 0; s < futures.size(); ++s) {
      try {
        outcomes[s] = futures[s].get();
      } catch (const DegenerateSystem&) {
        outcomes[s] = std::nullopt;
      }
    }
  } else {
    for (std::size_t s = 0; s < starts.size(); ++s) {
      try {
        outcomes[s] = run_start(starts[s]);
      } catch (const DegenerateSystem&) {
        outcomes[s] = std::nullopt;
      }
    }
  }

  std::size_t best = starts.size();
  std::vector<double> start_objectives(starts.size(),
                                       std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < outcomes.size(); ++s) {
    if (!outcomes[s]) continue;
    start_objectives[s] = outcomes[s]->residual_norm;
    if (best == starts.size() || start_objectives[s] < start_objectives[best]) best = s;
  }
  if (best == starts.size()) {
    throw DegenerateSystem("solve: every start ended degenerate");
  }
  ApproxResult res = std::move(*outcomes[best]);
  res.start_objectives = std::move(start_objectives);
  return res;
}

}  // namespace rka
