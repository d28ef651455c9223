#include "rka/probes.hpp"

#include <cmath>

namespace rka {

BoundarySequence BoundarySequence::dyadic(std::size_t j_min, std::size_t j_max, double angle,
                                          double radius_cap) {
  detail::require(j_min >= 1 && j_max >= j_min, "BoundarySequence: need 1 <= j_min <= j_max");
  detail::require(radius_cap < 1.0, "BoundarySequence: radii must stay below 1");
  BoundarySequence seq;
  seq.angle = angle;
  for (std::size_t j = j_min; j <= j_max; ++j) {
    const double r = 1.0 - std::pow(2.0, -static_cast<double>(j));
    if (r > radius_cap) break;
    seq.radii.push_back(r);
  }
  detail::require(!seq.radii.empty(), "BoundarySequence: cap excludes every radius");
  return seq;
}

std::vector<Complex> BoundarySequence::points() const {
  std::vector<Complex> out;
  out.reserve(radii.size());
  for (double r : radii) {
    out.push_back(Complex{r * std::cos(angle), r * std::sin(angle)});
  }
  return out;
}

std::vector<double> dbvc_probe(const SpaceSpec& spec, Complex z, const BoundarySequence& seq) {
  detail::require(std::abs(z) < 1.0, "dbvc_probe: z must lie in the open disc");
  const double s = spec.kernel_exponent();
  const double nz = std::pow(1.0 - std::norm(z), 0.5 * s);  // 1/||K_z||
  std::vector<double> out;
  out.reserve(seq.radii.size());
  for (Complex w : seq.points()) {
    detail::require(w != z, "dbvc_probe: sequence may not pass through z");
    const double nw = std::pow(1.0 - std::norm(w), 0.5 * s);
    out.push_back(std::abs(kernel_inner(spec, z, w)) * nz * nw);
  }
  return out;
}

std::vector<double> bvc_probe(const PowerSeries& f, const SpaceSpec& spec,
                              const BoundarySequence& seq) {
  const double s = spec.kernel_exponent();
  std::vector<double> out;
  out.reserve(seq.radii.size());
  for (Complex w : seq.points()) {
    const double inv_norm = std::pow(1.0 - std::norm(w), 0.5 * s);
    out.push_back(std::abs(evaluate(f, w)) * inv_norm);
  }
  return out;
}

std::vector<double> vanishing_probe(const PowerSeries& h, const SpaceSpec& spec,
                                    const ParameterTuple& fixed_tuple,
                                    const BoundarySequence& seq) {
  const OrthoSystem sys = gram_schmidt(spec, fixed_tuple);
  const PowerSeries residual = project(h, sys).residual;
  const double s = spec.kernel_exponent();
  std::vector<double> out;
  out.reserve(seq.radii.size());
  for (Complex w : seq.points()) {
    // same degeneracy rule as extend: a probe point on top of a tuple point
    // has no incremental element
    bool coincident = false;
    for (std::size_t k = 0; k < fixed_tuple.size(); ++k) {
      if (std::abs(w - fixed_tuple.point(k)) <= kDefaultMergeDelta) coincident = true;
    }
    if (coincident) {
      out.push_back(kProbeDegenerate);
      continue;
    }
    const double inv_norm = std::pow(1.0 - std::norm(w), 0.5 * s);  // 1/||K_w||
    // <E_w, B_t> in magnitude is |B_t(w)| / ||K_w|| by the reproducing
    // property, so the normalization denominator needs no kernel series at w.
    double proj2 = 0.0;
    for (std::size_t t = 0; t < sys.size(); ++t) {
      const double bt = std::abs(evaluate(sys.basis(t), w)) * inv_norm;
      proj2 += bt * bt;
    }
    const double denom2 = 1.0 - proj2;
    if (!(denom2 > kDefaultLicFloor * kDefaultLicFloor)) {
      out.push_back(kProbeDegenerate);
      continue;
    }
    const double numer = std::abs(evaluate(residual, w)) * inv_norm;
    out.push_back(numer / std::sqrt(denom2));
  }
  return out;
}

double interior_margin(const ApproxResult& result) {
  return result.r_max - result.parameters.max_modulus();
}

}  // namespace rka
