#include "rka/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace rka {

Complex poly_eval(const Poly& p, Complex z) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::size_t poly_degree(const Poly& p, double tol) {
  double maxabs = 0.0;
  for (const Complex& c : p) maxabs = std::max(maxabs, std::abs(c));
  if (maxabs == 0.0) return 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (std::abs(p[k]) > tol * maxabs) return k;
  }
  return 0;
}

std::vector<Complex> poly_roots(const Poly& p, double tol) {
  const std::size_t deg = poly_degree(p, tol);
  if (deg == 0) return {};
  // Monic companion matrix of the degree-deg truncation.
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                              static_cast<Eigen::Index>(deg));
  const Complex lead = p[deg];
  for (std::size_t k = 0; k < deg; ++k) {
    c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(deg - 1)) = -p[k] / lead;
    if (k + 1 < deg) {
      c(static_cast<Eigen::Index>(k + 1), static_cast<Eigen::Index>(k)) = Complex{1.0, 0.0};
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, /*computeEigenvectors=*/false);
  std::vector<Complex> roots;
  roots.reserve(deg);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    roots.push_back(es.eigenvalues()(k));
  }
  return roots;
}

double resultant_magnitude(const Poly& a, const Poly& b) {
  auto normalized = [](Poly p) {
    double maxabs = 0.0;
    for (const Complex& c : p) maxabs = std::max(maxabs, std::abs(c));
    detail::require(maxabs > 0.0, "resultant: zero polynomial");
    for (Complex& c : p) c /= maxabs;
    return p;
  };
  const Poly pa = normalized(a);
  const Poly pb = normalized(b);
  const std::size_t da = poly_degree(pa, 1e-14);
  const std::size_t db = poly_degree(pb, 1e-14);
  if (da == 0 && db == 0) return 1.0;  // nonzero constants share no root
  const std::size_t n = da + db;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  // Sylvester matrix: db shifted copies of a's coefficients, then da of b's.
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t k = 0; k <= da; ++k) {
      s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r + k)) = pa[da - k];
    }
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t k = 0; k <= db; ++k) {
      s(static_cast<Eigen::Index>(db + r), static_cast<Eigen::Index>(r + k)) = pb[db - k];
    }
  }
  return std::abs(s.fullPivLu().determinant());
}

RationalForm tm_to_rational(const BlaschkeForm& form) {
  const ParameterTuple& tuple = form.tuple;
  const std::size_t n = tuple.size();
  detail::require(form.coefficients.size() == n,
                  "tm_to_rational: coefficient count must match the tuple");
  for (std::size_t k = 0; k < n; ++k) {
    if (tuple.multiplicity(k) > 1) {
      throw DegenerateTuple("tm_to_rational: parameters must be pairwise distinct");
    }
  }
  RationalForm out;
  out.degree_bound = n;
  out.q = Poly{Complex{1.0, 0.0}};
  for (std::size_t l = 0; l < n; ++l) {
    out.q = poly_mul(out.q, Poly{Complex{1.0, 0.0}, -std::conj(tuple.point(l))});
  }
  out.p.assign(n == 0 ? 1 : n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    Poly term{Complex{std::sqrt(1.0 - std::norm(tuple.point(k))), 0.0}};
    term[0] *= form.coefficients[k];
    for (std::size_t l = 0; l < k; ++l) {
      term = poly_mul(term, Poly{-tuple.point(l), Complex{1.0, 0.0}});
    }
    for (std::size_t l = k + 1; l < n; ++l) {
      term = poly_mul(term, Poly{Complex{1.0, 0.0}, -std::conj(tuple.point(l))});
    }
    if (out.p.size() < term.size()) out.p.resize(term.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < term.size(); ++i) out.p[i] += term[i];
  }
  return out;
}

AdmissibilityReport admissible(const RationalForm& form, std::size_t n) {
  detail::require(!form.q.empty(), "admissible: q must be a nonzero polynomial");
  detail::require(poly_degree(form.q, 1e-14) > 0 || std::abs(form.q[0]) > 0.0,
                  "admissible: q must be a nonzero polynomial");
  AdmissibilityReport rep;
  rep.degrees_ok = poly_degree(form.p, 1e-12) <= n && poly_degree(form.q, 1e-12) <= n;
  rep.resultant = resultant_magnitude(form.p, form.q);
  rep.coprime = rep.resultant > kCoprimeFloor;
  rep.min_q_root_modulus = std::numeric_limits<double>::infinity();
  for (const Complex& r : poly_roots(form.q)) {
    rep.min_q_root_modulus = std::min(rep.min_q_root_modulus, std::abs(r));
  }
  if (rep.min_q_root_modulus > 1.0 - kRootBand && rep.min_q_root_modulus < 1.0 + kRootBand) {
    rep.boundary_indeterminate = true;
  }
  rep.q_zero_free = rep.min_q_root_modulus > 1.0 + kRootBand;
  rep.admissible = rep.coprime && rep.q_zero_free && rep.degrees_ok;
  return rep;
}

PowerSeries blaschke_product(const ParameterTuple& tuple, std::size_t truncation) {
  PowerSeries out(truncation);
  out[0] = Complex{1.0, 0.0};
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const Complex w = tuple.point(k);
    const Complex wbar = std::conj(w);
    detail::require(std::abs(w) < 1.0, "blaschke_product: parameters must be interior");
    PowerSeries factor(truncation);  // (z - w) * sum conj(w)^j z^j
    factor[0] = -w;
    Complex q{1.0 - std::norm(w), 0.0};
    for (std::size_t j = 1; j < truncation; ++j) {
      factor[j] = q;
      q *= wbar;
    }
    out = multiply(out, factor);
  }
  return out;
}

}  // namespace rka
