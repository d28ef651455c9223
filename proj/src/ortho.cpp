#include "rka/ortho.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>

namespace rka {

namespace {

// First coefficient that is structurally nonzero (relative threshold, so the
// rounding dust below the leading term of a kernel combination is skipped).
std::size_t leading_index(const PowerSeries& f) {
  double maxabs = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) maxabs = std::max(maxabs, std::abs(f[k]));
  if (maxabs == 0.0) return f.size();
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (std::abs(f[k]) > 1e-8 * maxabs) return k;
  }
  return f.size();
}

// Rotate so the leading coefficient is positive real. The TM system is fixed
// only up to a unimodular constant; this pins a deterministic representative.
Complex phase_fix(PowerSeries& f) {
  const std::size_t k = leading_index(f);
  if (k == f.size()) return Complex{1.0, 0.0};
  const Complex c = f[k];
  const Complex rot = std::conj(c) / std::abs(c);
  f *= rot;
  return rot;
}

struct StepResult {
  PowerSeries series;
  std::vector<Complex> row;
  double denom = 1.0;
  std::size_t order = 0;
};

// One Gram-Schmidt step: orthonormalize the kernel at b against the existing
// basis (two sweeps; near-coalescent tuples lose orthogonality in a single
// classical pass). Throws DegenerateSystem per the lic floor and the
// near-coincidence rule.
StepResult gs_step(const SpaceSpec& spec, const ParameterTuple& source,
                   const std::vector<PowerSeries>& basis,
                   const std::vector<std::vector<Complex>>& expansion, Complex b,
                   double lic_floor, double merge_delta) {
  std::size_t repeats = 0;
  double min_dist = 2.0;
  for (std::size_t j = 0; j < source.size(); ++j) {
    const double d = std::abs(source.point(j) - b);
    if (d == 0.0) {
      ++repeats;
    } else {
      min_dist = std::min(min_dist, d);
    }
  }
  if (repeats == 0 && min_dist <= merge_delta) {
    throw DegenerateSystem("extend: parameter within merge distance of an existing point");
  }

  StepResult out;
  out.order = repeats;  // exact repeat -> next derivative order
  out.series = normalized_kernel(spec, b, out.order).series;
  const std::size_t t = basis.size();
  out.row.assign(t + 1, Complex{0.0, 0.0});
  out.row[t] = Complex{1.0, 0.0};
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (std::size_t j = 0; j < t; ++j) {
      const Complex r = inner_product(out.series, basis[j], spec);
      out.series.axpy(-r, basis[j]);
      for (std::size_t i = 0; i <= j; ++i) out.row[i] -= r * expansion[j][i];
    }
  }
  out.denom = norm(out.series, spec);
  if (!(out.denom > lic_floor)) {
    throw DegenerateSystem("gram_schmidt: normalization denominator below lic floor");
  }
  const Complex inv{1.0 / out.denom, 0.0};
  out.series *= inv;
  for (Complex& c : out.row) c /= out.denom;
  const Complex rot = phase_fix(out.series);
  for (Complex& c : out.row) c *= rot;
  return out;
}

double gram_min_eigenvalue(const SpaceSpec& spec, const ParameterTuple& tuple) {
  const std::size_t n = tuple.size();
  if (n == 0) return 1.0;
  const auto rows = gram_matrix(spec, tuple);
  Eigen::MatrixXcd g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

std::vector<std::vector<Complex>> gram_matrix(const SpaceSpec& spec,
                                              const ParameterTuple& tuple) {
  const std::size_t n = tuple.size();
  std::vector<PowerSeries> kernels;
  kernels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    kernels.push_back(normalized_kernel(spec, tuple.point(k), tuple.order(k)).series);
  }
  std::vector<std::vector<Complex>> g(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = Complex{1.0, 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      const Complex v = inner_product(kernels[i], kernels[j], spec);
      g[i][j] = v;
      g[j][i] = std::conj(v);
    }
  }
  return g;
}

OrthoSystem OrthoSystem::build(const SpaceSpec& spec, const ParameterTuple& tuple,
                               double lic_floor) {
  OrthoSystem sys(spec);
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const Complex b = tuple.point(k);
    // Reuse the step with an exact-repeat-aware source so multiplicities map
    // to derivative orders exactly as in the tuple.
    StepResult step = gs_step(spec, sys.source_, sys.basis_, sys.expansion_, b, lic_floor,
                              /*merge_delta=*/0.0);
    sys.source_ = sys.source_.with_appended(b);
    sys.basis_.push_back(std::move(step.series));
    sys.expansion_.push_back(std::move(step.row));
    sys.kernel_norms_.push_back(norm(kernel(spec, b, step.order).series, spec));
  }
  sys.gram_min_eig_ = gram_min_eigenvalue(spec, sys.source_);
  return sys;
}

OrthoSystem OrthoSystem::empty(const SpaceSpec& spec) { return OrthoSystem(spec); }

std::vector<std::vector<Complex>> OrthoSystem::coeff_matrix() const {
  std::vector<std::vector<Complex>> rows = expansion_;
  for (auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) row[j] /= kernel_norms_[j];
  }
  return rows;
}

OrthoSystem OrthoSystem::extended(Complex b, double lic_floor, double merge_delta) const {
  StepResult step = gs_step(spec_, source_, basis_, expansion_, b, lic_floor, merge_delta);
  OrthoSystem sys(*this);
  sys.source_ = source_.with_appended(b);
  sys.basis_.push_back(std::move(step.series));
  sys.expansion_.push_back(std::move(step.row));
  sys.kernel_norms_.push_back(norm(kernel(spec_, b, step.order).series, spec_));
  sys.gram_min_eig_ = gram_min_eigenvalue(spec_, sys.source_);
  return sys;
}

OrthoSystem gram_schmidt(const SpaceSpec& spec, const ParameterTuple& tuple,
                         double lic_floor) {
  detail::require(tuple.max_modulus() <= spec.r_max(),
                  "gram_schmidt: tuple contains a parameter beyond r_max");
  return OrthoSystem::build(spec, tuple, lic_floor);
}

std::vector<PowerSeries> tm_closed_form(const SpaceSpec& spec, const ParameterTuple& tuple) {
  detail::require(spec.kind() == SpaceKind::Hardy, "tm_closed_form: Hardy space only");
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple.multiplicity(k) > 1) {
      throw DegenerateTuple("tm_closed_form: parameters must be pairwise distinct");
    }
  }
  const std::size_t n = spec.truncation();
  std::vector<PowerSeries> out;
  out.reserve(tuple.size());
  PowerSeries blaschke(n);  // running product of the first k-1 factors
  blaschke[0] = Complex{1.0, 0.0};
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const Complex w = tuple.point(k);
    const Complex wbar = std::conj(w);
    const double s = std::sqrt(1.0 - std::norm(w));
    PowerSeries ew(n);  // sqrt(1-|w|^2) * sum conj(w)^j z^j
    Complex p{s, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      ew[j] = p;
      p *= wbar;
    }
    out.push_back(multiply(blaschke, ew));
    PowerSeries factor(n);  // (z - w)/(1 - conj(w) z)
    factor[0] = -w;
    Complex q{1.0 - std::norm(w), 0.0};
    for (std::size_t j = 1; j < n; ++j) {
      factor[j] = q;
      q *= wbar;
    }
    blaschke = multiply(blaschke, factor);
  }
  return out;
}

ProjectionResult project(const PowerSeries& f, const OrthoSystem& system) {
  ProjectionResult out;
  out.coeffs.reserve(system.size());
  out.residual = f;
  for (std::size_t t = 0; t < system.size(); ++t) {
    const Complex c = inner_product(f, system.basis(t), system.spec());
    out.coeffs.push_back(c);
    out.residual.axpy(-c, system.basis(t));
  }
  return out;
}

double lic_check(const SpaceSpec& spec, const ParameterTuple& tuple) {
  detail::require(tuple.max_modulus() <= spec.r_max(),
                  "lic_check: tuple contains a parameter beyond r_max");
  return gram_min_eigenvalue(spec, tuple);
}

ExtendResult extend(const OrthoSystem& system, Complex b, double lic_floor,
                    double merge_delta) {
  StepResult step = gs_step(system.spec(), system.source(), system.basis(),
                            system.expansion_normalized(), b, lic_floor, merge_delta);
  return ExtendResult{std::move(step.series), step.denom, step.order};
}

}  // namespace rka
