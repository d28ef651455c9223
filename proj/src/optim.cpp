#include "rka/optim.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace rka {

std::pair<Complex, double> nelder_mead_max(const std::function<double(Complex)>& fn,
                                           Complex start, const NelderMeadOptions& opts) {
  struct Vertex {
    Complex x;
    double v;
  };
  std::array<Vertex, 3> s{};
  s[0] = {start, fn(start)};
  s[1] = {start + Complex{opts.initial_step, 0.0}, 0.0};
  s[2] = {start + Complex{0.0, opts.initial_step}, 0.0};
  s[1].v = fn(s[1].x);
  s[2].v = fn(s[2].x);

  auto order = [&] {
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v > b.v; });
  };
  order();

  for (std::size_t iter = 0; iter < opts.max_iters; ++iter) {
    const double diam = std::max(std::abs(s[0].x - s[1].x),
                                 std::max(std::abs(s[0].x - s[2].x), std::abs(s[1].x - s[2].x)));
    if (diam < opts.tol) break;

    const Complex centroid = 0.5 * (s[0].x + s[1].x);
    const Complex refl = centroid + (centroid - s[2].x);
    const double refl_v = fn(refl);
    if (refl_v > s[0].v) {
      const Complex expa = centroid + 2.0 * (centroid - s[2].x);
      const double expa_v = fn(expa);
      s[2] = expa_v > refl_v ? Vertex{expa, expa_v} : Vertex{refl, refl_v};
    } else if (refl_v > s[1].v) {
      s[2] = {refl, refl_v};
    } else {
      const Complex contr = centroid + 0.5 * (s[2].x - centroid);
      const double contr_v = fn(contr);
      if (contr_v > s[2].v) {
        s[2] = {contr, contr_v};
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
          s[i].v = fn(s[i].x);
        }
      }
    }
    order();
  }
  return {s[0].x, s[0].v};
}

}  // namespace rka
