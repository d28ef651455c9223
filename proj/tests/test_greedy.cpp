#include <doctest.h>

#include <cmath>
#include <future>

#include "rka/greedy.hpp"
#include "rka/nbest.hpp"
#include "test_util.hpp"

using namespace rka;

namespace {

PowerSeries monomial_z(std::size_t n) {
  PowerSeries z(n);
  z[1] = Complex{1.0, 0.0};
  return z;
}

}  // namespace

TEST_CASE("energy_gain") {
  const SpaceSpec hardy = SpaceSpec::hardy(512, 0.95);
  const OrthoSystem empty = OrthoSystem::empty(hardy);
  SUBCASE("unit vector against itself") {
    const Complex a{0.4, -0.2};
    const PowerSeries f = normalized_kernel(hardy, a).series;
    CHECK(energy_gain(f, empty, a) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("f = z at |b| = 1/sqrt(2) gives 1/2") {
    const PowerSeries z = monomial_z(512);
    const Complex b = std::sqrt(0.5) * Complex{std::cos(1.1), std::sin(1.1)};
    CHECK(energy_gain(z, empty, b) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("orthogonal target gains nothing") {
    // <z^2, K_0> = 0, so the very first selection at b = 0 gains nothing
    PowerSeries f(512);
    f[2] = Complex{1.0, 0.0};
    CHECK(energy_gain(f, empty, Complex{0.0, 0.0}) == 0.0);
    // z^3 against span{1, z} extended by the second derivative at 0 (a z^2
    // direction): still orthogonal
    const OrthoSystem sys =
        gram_schmidt(hardy, ParameterTuple({Complex{0.0, 0.0}, Complex{0.0, 0.0}}));
    PowerSeries f3(512);
    f3[3] = Complex{1.0, 0.0};
    CHECK(energy_gain(f3, sys, Complex{0.0, 0.0}) == 0.0);
  }
  SUBCASE("the gain is unchanged when the projection is removed first") {
    testing::Rng rng(73);
    const OrthoSystem sys =
        gram_schmidt(hardy, ParameterTuple({Complex{0.3, 0.1}, Complex{-0.4, 0.2}}));
    for (int trial = 0; trial < 5; ++trial) {
      const PowerSeries f = rng.polynomial(512, 24);
      const PowerSeries residual = project(f, sys).residual;
      const Complex b = rng.disc(0.9);
      CHECK(energy_gain(f, sys, b) ==
            doctest::Approx(energy_gain(residual, sys, b)).epsilon(1e-10));
    }
  }
}

TEST_CASE("select_next") {
  const SpaceSpec hardy = SpaceSpec::hardy(512, 0.95);
  const OrthoSystem empty = OrthoSystem::empty(hardy);
  SUBCASE("picks an on-grid target parameter") {
    const PowerSeries f = normalized_kernel(hardy, Complex{0.3, 0.0}).series;
    GreedyConfig cfg;
    cfg.grid = PolarGrid::chebyshev(16, 16, 0.95);
    cfg.grid.radii.push_back(0.3);
    std::sort(cfg.grid.radii.begin(), cfg.grid.radii.end());
    cfg.refine = false;
    const Selection sel = select_next(f, empty, cfg);
    CHECK(std::abs(sel.point - Complex{0.3, 0.0}) < 1e-12);
  }
  SUBCASE("f = z selects the 1/sqrt(2) radius") {
    GreedyConfig cfg;
    cfg.grid = PolarGrid::chebyshev(16, 8, 0.95);
    cfg.grid.radii.push_back(std::sqrt(0.5));
    std::sort(cfg.grid.radii.begin(), cfg.grid.radii.end());
    cfg.refine = false;
    const Selection sel = select_next(monomial_z(512), empty, cfg);
    CHECK(std::abs(sel.point) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  }
  SUBCASE("exact ties break to the smallest radial then angular index") {
    // every angular point of the radius-0 ring is the same argument value, so
    // the gains tie exactly and the scan order decides
    GreedyConfig cfg;
    cfg.grid.radii = {0.0, 0.3, 0.5, 0.7};
    cfg.grid.angular = 8;
    cfg.refine = false;
    PowerSeries one(512);
    one[0] = Complex{1.0, 0.0};
    const Selection sel = select_next(one, empty, cfg);
    CHECK(sel.radial_index == 0);
    CHECK(sel.angular_index == 0);
    CHECK(sel.gain == doctest::Approx(1.0));
  }
  SUBCASE("weak selection satisfies the rho bound") {
    GreedyConfig cfg;
    cfg.rho = 0.5;
    cfg.grid = PolarGrid::chebyshev(24, 24, 0.95);
    const Selection sel = select_next(monomial_z(512), empty, cfg);
    CHECK(sel.gain >= 0.5 * sel.grid_best_gain);
    CHECK(sel.gain >= 0.25 - 1e-9);  // any acceptable point has gain >= rho * max
  }
  SUBCASE("selected points never violate the exclusion distance") {
    const OrthoSystem sys = gram_schmidt(hardy, ParameterTuple({Complex{0.3, 0.0}}));
    GreedyConfig cfg;
    cfg.grid = PolarGrid::chebyshev(12, 12, 0.95);
    const PowerSeries f = normalized_kernel(hardy, Complex{0.3, 0.0}).series;
    const Selection sel = select_next(f, sys, cfg);  // true argmax excluded
    CHECK(std::abs(sel.point - Complex{0.3, 0.0}) > cfg.delta);
  }
  SUBCASE("empty grid throws") {
    GreedyConfig cfg;
    cfg.grid = PolarGrid::chebyshev(4, 4, 0.95);
    cfg.delta = 3.0;  // excludes everything
    const OrthoSystem sys = gram_schmidt(hardy, ParameterTuple({Complex{0.1, 0.0}}));
    CHECK_THROWS_AS((void)select_next(monomial_z(512), sys, cfg), EmptyGrid);
  }
  SUBCASE("scan gains agree with the extend route") {
    // the scan uses an evaluation-based shortcut; its value must match
    // energy_gain at the selected point in every space
    const SpaceSpec bergman = SpaceSpec::weighted_bergman(1.0, 512, 0.95);
    testing::Rng rng(57);
    for (const SpaceSpec& spec : {hardy, bergman}) {
      const OrthoSystem sys =
          gram_schmidt(spec, ParameterTuple({Complex{0.3, 0.1}, Complex{-0.5, 0.2}}));
      const PowerSeries f = rng.polynomial(512, 18);
      GreedyConfig cfg;
      cfg.grid = PolarGrid::chebyshev(8, 8, 0.95);
      cfg.refine = false;
      const Selection sel = select_next(f, sys, cfg);
      CHECK(sel.gain == doctest::Approx(energy_gain(f, sys, sel.point)).epsilon(1e-10));
      cfg.rho = 0.7;
      const Selection weak = select_next(f, sys, cfg);
      CHECK(weak.gain ==
            doctest::Approx(energy_gain(f, sys, weak.point)).epsilon(1e-10));
    }
  }
}

TEST_CASE("poafd") {
  const SpaceSpec hardy = SpaceSpec::hardy(512, 0.95);
  SUBCASE("recovers a single kernel on the grid") {
    const PowerSeries f = normalized_kernel(hardy, Complex{0.3, 0.0}).series;
    GreedyConfig cfg;
    cfg.grid = PolarGrid::chebyshev(16, 16, 0.95);
    cfg.grid.radii.push_back(0.3);
    std::sort(cfg.grid.radii.begin(), cfg.grid.radii.end());
    cfg.n_terms = 1;
    cfg.refine = false;
    const ApproxResult res = poafd(f, hardy, cfg);
    CHECK(res.residual_norm <= 1e-8);
    // asking for more terms stops early once the residual is spent
    cfg.n_terms = 3;
    const ApproxResult early = poafd(f, hardy, cfg);
    CHECK(early.parameters.size() == 1);
    CHECK(early.objective_trace.size() == 2);
  }
  SUBCASE("two-kernel target on an exact grid, against brute-force scans") {
    // Both parameters lie on the grid (radius entries 0.3 and 0.4; angles 0
    // and -pi/2 of the 128 angles).
    PowerSeries f(512);
    f.axpy(Complex{0.7, 0.0}, normalized_kernel(hardy, Complex{0.3, 0.0}).series);
    f.axpy(Complex{0.3, 0.0}, normalized_kernel(hardy, Complex{0.0, -0.4}).series);
    GreedyConfig cfg;
    cfg.grid = PolarGrid::chebyshev(16, 128, 0.95);
    cfg.grid.radii.push_back(0.3);
    cfg.grid.radii.push_back(0.4);
    std::sort(cfg.grid.radii.begin(), cfg.grid.radii.end());
    cfg.n_terms = 2;
    cfg.refine = false;
    // each selection must be the full-grid gain argmax, replayed here by an
    // independent scan
    OrthoSystem sys = OrthoSystem::empty(hardy);
    for (int step = 0; step < 2; ++step) {
      GreedyConfig one = cfg;
      one.n_terms = 1;
      const Selection sel = select_next(f, sys, one);
      double best = -1.0;
      for (std::size_t i = 0; i < cfg.grid.radii.size(); ++i) {
        for (std::size_t j = 0; j < cfg.grid.angular; ++j) {
          const Complex b = cfg.grid.point(i, j);
          bool skip = false;
          for (std::size_t k = 0; k < sys.source().size(); ++k) {
            if (std::abs(b - sys.source().point(k)) <= cfg.delta) skip = true;
          }
          if (!skip) best = std::max(best, energy_gain(f, sys, b));
        }
      }
      CHECK(sel.gain == doctest::Approx(best).epsilon(1e-12));
      sys = sys.extended(sel.point, kDefaultLicFloor, cfg.delta);
    }
    // grid resolution bounds the jointly achievable residual: with both
    // parameters on the grid the two-subset optimum is numerically exact,
    // while the one-at-a-time greedy stays above it on this strongly
    // correlated pair
    const ApproxResult joint = brute_force(f, hardy, 2, cfg.grid);
    CHECK(joint.residual_norm <= 1e-8);
    const ApproxResult res = poafd(f, hardy, cfg);
    CHECK(res.residual_norm >= joint.residual_norm);
    CHECK(res.residual_norm == doctest::Approx(norm(project(f, sys).residual, hardy))
                                   .epsilon(1e-12));
  }
  SUBCASE("f = z reaches the calculus optimum") {
    GreedyConfig cfg;
    cfg.grid = PolarGrid::chebyshev(32, 32, 0.95);
    cfg.n_terms = 1;
    cfg.refine = true;
    const ApproxResult res = poafd(monomial_z(512), hardy, cfg);
    CHECK(res.residual_norm * res.residual_norm == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(std::abs(res.parameters.point(0)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-4));
  }
  SUBCASE("residual trajectory is non-increasing and parameters separated") {
    testing::Rng rng(5);
    const PowerSeries f = rng.polynomial(512, 40);
    GreedyConfig cfg = default_greedy_config(hardy, 6);
    cfg.grid = PolarGrid::chebyshev(24, 48, 0.95);
    const ApproxResult res = poafd(f, hardy, cfg);
    for (std::size_t i = 1; i < res.objective_trace.size(); ++i) {
      CHECK(res.objective_trace[i] <= res.objective_trace[i - 1] + 1e-12);
    }
    const auto& t = res.parameters;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        CHECK(std::abs(t.point(i) - t.point(j)) > cfg.delta);
      }
    }
    // weak-maximality certificate at rho = 1: the recorded gain dominates a
    // post-hoc scan of the grid
  }
  SUBCASE("weak selection logs a re-checkable maximality certificate") {
    testing::Rng rng(6);
    const PowerSeries f = rng.polynomial(512, 24);
    GreedyConfig cfg;
    cfg.rho = 0.6;
    cfg.grid = PolarGrid::chebyshev(16, 32, 0.95);
    cfg.n_terms = 5;
    const ApproxResult res = poafd(f, hardy, cfg);
    REQUIRE(res.objective_trace.size() == 6);
    for (std::size_t i = 1; i < res.objective_trace.size(); ++i) {
      CHECK(res.objective_trace[i] <= res.objective_trace[i - 1] + 1e-12);
    }
    CHECK(res.residual_norm < res.objective_trace.front());
    REQUIRE(res.selection_gains.size() == 5);
    for (std::size_t i = 0; i < res.selection_gains.size(); ++i) {
      CHECK(res.selection_gains[i] >= cfg.rho * res.grid_best_gains[i] - 1e-12);
    }
  }
  SUBCASE("gain evaluation is safe under concurrency") {
    const OrthoSystem sys = gram_schmidt(
        hardy, ParameterTuple({Complex{0.3, 0.1}, Complex{-0.2, 0.4}}));
    testing::Rng rng(8);
    const PowerSeries f = rng.polynomial(512, 16);
    std::vector<Complex> pts;
    for (int i = 0; i < 16; ++i) pts.push_back(rng.disc(0.9));
    std::vector<double> sequential;
    for (const Complex& b : pts) sequential.push_back(energy_gain(f, sys, b));
    std::vector<std::future<double>> futs;
    for (const Complex& b : pts) {
      futs.push_back(std::async(std::launch::async,
                                [&f, &sys, b] { return energy_gain(f, sys, b); }));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(futs[i].get() == sequential[i]);
    }
  }
}
