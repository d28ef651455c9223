#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rka/ortho.hpp"
#include "rka/rational.hpp"
#include "test_util.hpp"

using namespace rka;

namespace {

// Boundary evaluation without the open-disc domain check of evaluate().
Complex eval_on_circle(const PowerSeries& f, double t) {
  const Complex z{std::cos(t), std::sin(t)};
  Complex acc{0.0, 0.0};
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * z + f[k];
  return acc;
}

PowerSeries blaschke_form_series(const SpaceSpec& spec, const BlaschkeForm& form) {
  const auto tm = tm_closed_form(spec, form.tuple);
  PowerSeries out(spec.truncation());
  for (std::size_t k = 0; k < tm.size(); ++k) out.axpy(form.coefficients[k], tm[k]);
  return out;
}

}  // namespace

TEST_CASE("tm_to_rational") {
  SUBCASE("single parameter at the origin") {
    BlaschkeForm form;
    form.coefficients = {Complex{2.0, 1.0}};
    form.tuple = ParameterTuple({Complex{0.0, 0.0}});
    const RationalForm rat = tm_to_rational(form);
    CHECK(rat.p.size() == 1);
    CHECK(rat.p[0] == Complex{2.0, 1.0});
    CHECK(poly_degree(rat.q) == 0);
    CHECK(rat.q[0] == Complex{1.0, 0.0});
  }
  SUBCASE("repeated parameters are rejected") {
    BlaschkeForm form;
    form.coefficients = {Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    form.tuple = ParameterTuple({Complex{0.0, 0.0}, Complex{0.0, 0.0}});
    CHECK_THROWS_AS((void)tm_to_rational(form), DegenerateTuple);
  }
  SUBCASE("single kernel at 0.5") {
    BlaschkeForm form;
    form.coefficients = {Complex{1.5, 0.0}};
    form.tuple = ParameterTuple({Complex{0.5, 0.0}});
    const RationalForm rat = tm_to_rational(form);
    CHECK(rat.p[0].real() == doctest::Approx(1.5 * std::sqrt(0.75)));
    CHECK(rat.q[0] == Complex{1.0, 0.0});
    CHECK(rat.q[1].real() == doctest::Approx(-0.5));
  }
  SUBCASE("second TM element of (0.5, 0.3)") {
    BlaschkeForm form;
    form.coefficients = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    form.tuple = ParameterTuple({Complex{0.5, 0.0}, Complex{0.3, 0.0}});
    const RationalForm rat = tm_to_rational(form);
    // q = (1-0.5z)(1-0.3z), p = sqrt(0.91) (z - 0.5)
    CHECK(rat.q[0].real() == doctest::Approx(1.0));
    CHECK(rat.q[1].real() == doctest::Approx(-0.8));
    CHECK(rat.q[2].real() == doctest::Approx(0.15));
    CHECK(rat.p[0].real() == doctest::Approx(-0.5 * std::sqrt(0.91)));
    CHECK(rat.p[1].real() == doctest::Approx(std::sqrt(0.91)));
  }
  SUBCASE("function equality at random disc points") {
    const SpaceSpec hardy = SpaceSpec::hardy(512, 0.95);
    testing::Rng rng(111);
    for (int trial = 0; trial < 5; ++trial) {
      BlaschkeForm form;
      std::vector<Complex> pts;
      for (int k = 0; k < 3; ++k) {
        pts.push_back(rng.disc(0.75));
        form.coefficients.push_back(rng.complex_box(1.0));
      }
      form.tuple = ParameterTuple(pts);
      const RationalForm rat = tm_to_rational(form);
      CHECK(poly_degree(rat.p) <= 3);
      CHECK(poly_degree(rat.q) <= 3);
      const PowerSeries combo = blaschke_form_series(hardy, form);
      for (int i = 0; i < 64; ++i) {
        const Complex z = rng.disc(0.8);
        const Complex lhs = poly_eval(rat.p, z) / poly_eval(rat.q, z);
        CHECK(std::abs(lhs - evaluate(combo, z)) < 1e-9);
      }
    }
  }
  SUBCASE("degree bookkeeping away from the origin") {
    BlaschkeForm form;
    form.coefficients = {Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    form.tuple = ParameterTuple({Complex{0.5, 0.0}, Complex{-0.2, 0.3}});
    CHECK(poly_degree(tm_to_rational(form).q) == 2);
  }
}

TEST_CASE("admissible") {
  SUBCASE("simple admissible pair") {
    const RationalForm form{{Complex{1.0, 0.0}},
                            {Complex{1.0, 0.0}, Complex{-0.5, 0.0}},
                            1};
    const AdmissibilityReport rep = admissible(form, 1);
    CHECK(rep.admissible);
    CHECK(rep.coprime);
    CHECK(rep.q_zero_free);
    CHECK(rep.degrees_ok);
    CHECK(rep.min_q_root_modulus == doctest::Approx(2.0));
  }
  SUBCASE("a shared factor fails the coprimality test") {
    // p = z - 2, q = (z - 2)(1 - 0.5 z) share the root 2
    const Poly p{Complex{-2.0, 0.0}, Complex{1.0, 0.0}};
    const Poly q = poly_mul(p, Poly{Complex{1.0, 0.0}, Complex{-0.5, 0.0}});
    const AdmissibilityReport rep = admissible(RationalForm{p, q, 2}, 2);
    CHECK_FALSE(rep.admissible);
    CHECK_FALSE(rep.coprime);
    CHECK(rep.q_zero_free);
  }
  SUBCASE("a root inside the disc fails") {
    const RationalForm form{{Complex{1.0, 0.0}},
                            {Complex{1.0, 0.0}, Complex{-2.0, 0.0}},
                            1};
    const AdmissibilityReport rep = admissible(form, 1);
    CHECK_FALSE(rep.admissible);
    CHECK_FALSE(rep.q_zero_free);
    CHECK(rep.min_q_root_modulus == doctest::Approx(0.5));
  }
  SUBCASE("boundary roots are flagged indeterminate") {
    const RationalForm form{{Complex{1.0, 0.0}},
                            {Complex{1.0, 0.0}, Complex{-1.0, 0.0}},  // root at 1
                            1};
    const AdmissibilityReport rep = admissible(form, 1);
    CHECK(rep.boundary_indeterminate);
    CHECK_FALSE(rep.admissible);
  }
  SUBCASE("degree bound violations are reported") {
    const Poly q{Complex{1.0, 0.0}, Complex{-0.5, 0.0}, Complex{0.05, 0.0}};
    const AdmissibilityReport rep = admissible(RationalForm{{Complex{1.0, 0.0}}, q, 1}, 1);
    CHECK_FALSE(rep.degrees_ok);
    CHECK_FALSE(rep.admissible);
  }
}

TEST_CASE("blaschke products") {
  SUBCASE("single zero at the origin is z") {
    const PowerSeries b = blaschke_product(ParameterTuple({Complex{0.0, 0.0}}), 64);
    CHECK(std::abs(b[0]) == 0.0);
    CHECK(b[1] == Complex{1.0, 0.0});
  }
  SUBCASE("double zero at the origin is z^2") {
    const PowerSeries b =
        blaschke_product(ParameterTuple({Complex{0.0, 0.0}, Complex{0.0, 0.0}}), 64);
    CHECK(std::abs(b[1]) == 0.0);
    CHECK(b[2] == Complex{1.0, 0.0});
  }
  SUBCASE("unimodular on the circle") {
    const PowerSeries b = blaschke_product(ParameterTuple({Complex{0.5, 0.0}}), 512);
    for (int m = 0; m < 256; ++m) {
      const double t = 2.0 * std::numbers::pi * m / 256.0;
      CHECK(std::abs(std::abs(eval_on_circle(b, t)) - 1.0) < 1e-8);
    }
  }
  SUBCASE("products with multiplicities stay unimodular") {
    const ParameterTuple tuple(
        {Complex{0.3, -0.2}, Complex{0.3, -0.2}, Complex{-0.5, 0.1}});
    const PowerSeries b = blaschke_product(tuple, 512);
    for (int m = 0; m < 64; ++m) {
      const double t = 2.0 * std::numbers::pi * m / 64.0;
      CHECK(std::abs(std::abs(eval_on_circle(b, t)) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("extension elements factor as Blaschke product times kernel") {
  // In the Hardy space the incremental orthonormal element over a tuple is
  // the Blaschke product of the tuple times the normalized kernel at the new
  // parameter, up to a unimodular constant.
  const SpaceSpec hardy = SpaceSpec::hardy(512, 0.95);
  testing::Rng rng(131);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Complex> pts;
    for (int k = 0; k < 3; ++k) pts.push_back(rng.disc(0.7));
    if (trial == 5) pts[2] = pts[0];  // Blaschke zeros include the multiples
    const ParameterTuple tuple(pts);
    const Complex b = rng.disc(0.7);
    const OrthoSystem sys = gram_schmidt(hardy, tuple);
    const ExtendResult ext = extend(sys, b);
    const PowerSeries candidate =
        multiply(blaschke_product(tuple, 512), normalized_kernel(hardy, b).series);
    const Complex align = inner_product(ext.next, candidate, hardy);
    CHECK(std::abs(std::abs(align) - 1.0) < 1e-8);
    PowerSeries diff = ext.next;
    diff.axpy(-align, candidate);
    CHECK(norm(diff, hardy) < 1e-8);
  }
}
