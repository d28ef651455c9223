// Hardy-only bridge between kernel orthonormal forms and rational functions:
// Takenaka-Malmquist combinations to p/q form, admissibility checks, and
// Blaschke products.
#pragma once

#include <cstddef>
#include <vector>

#include "rka/dict.hpp"
#include "rka/space.hpp"
#include "rka/types.hpp"

namespace rka {

/// Polynomial coefficients in ascending degree order.
using Poly = std::vector<Complex>;

Complex poly_eval(const Poly& p, Complex z);
Poly poly_mul(const Poly& a, const Poly& b);
std::size_t poly_degree(const Poly& p, double tol = 0.0);

/// Roots via balanced companion-matrix eigenvalues. Leading coefficients
/// below tol (relative to the largest) are stripped first.
std::vector<Complex> poly_roots(const Poly& p, double tol = 1e-12);

/// Resultant of a and b after normalizing each to unit max coefficient,
/// via the Sylvester matrix determinant.
double resultant_magnitude(const Poly& a, const Poly& b);

struct RationalForm {
  Poly p;
  Poly q;
  std::size_t degree_bound = 0;
};

/// Linear combination sum c_k B_k of the Takenaka-Malmquist system of a
/// parameter tuple; "n-degenerate" when the last coefficient is nonzero.
struct BlaschkeForm {
  std::vector<Complex> coefficients;
  ParameterTuple tuple;

  bool is_degenerate() const {
    return !coefficients.empty() && coefficients.back() != Complex{0.0, 0.0};
  }
};

/// Expand the TM combination over the common denominator:
/// q(z) = prod (1 - conj(w_k) z),
/// p(z) = sum c_k sqrt(1-|w_k|^2) prod_{l<k}(z-w_l) prod_{l>k}(1-conj(w_l) z).
/// Requires pairwise distinct parameters (DegenerateTuple otherwise).
RationalForm tm_to_rational(const BlaschkeForm& form);

struct AdmissibilityReport {
  bool admissible = false;
  bool coprime = false;
  bool q_zero_free = false;
  bool degrees_ok = false;
  /// Set when some root of q sits inside the +/-1e-9 band around the unit
  /// circle, where the zero-free test cannot decide; never silently passed.
  bool boundary_indeterminate = false;
  double resultant = 0.0;
  double min_q_root_modulus = 0.0;
};

inline constexpr double kCoprimeFloor = 1e-10;
inline constexpr double kRootBand = 1e-9;

/// Checks the three admissibility conditions (coprimality by resultant with
/// tolerance, q zero-free on the closed disc by companion roots, degree
/// bounds) and reports which fail.
AdmissibilityReport admissible(const RationalForm& form, std::size_t n);

/// Truncated series of prod (z - w_l)/(1 - conj(w_l) z), multiplicities
/// included; unimodular on the circle.
PowerSeries blaschke_product(const ParameterTuple& tuple, std::size_t truncation);

}  // namespace rka
