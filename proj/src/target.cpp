#include "rka/target.hpp"

#include <algorithm>
#include <cmath>

#include "rka/dict.hpp"

namespace rka {

TargetSpec TargetSpec::from_taylor(std::vector<Complex> coeffs) {
  TargetSpec t;
  t.kind = Kind::Taylor;
  t.taylor = std::move(coeffs);
  return t;
}

TargetSpec TargetSpec::from_rational(std::vector<Complex> poles, std::vector<Complex> residues) {
  detail::require(poles.size() == residues.size(),
                  "TargetSpec: poles and residues must pair up");
  for (const Complex& p : poles) {
    detail::require(std::abs(p) > 1.0, "TargetSpec: poles must lie outside the closed disc");
  }
  TargetSpec t;
  t.kind = Kind::Rational;
  t.poles = std::move(poles);
  t.residues = std::move(residues);
  return t;
}

TargetSpec TargetSpec::from_builtin(std::string name) {
  const auto& names = builtin_target_names();
  detail::require(std::find(names.begin(), names.end(), name) != names.end(),
                  "TargetSpec: unknown builtin target '" + name + "'");
  TargetSpec t;
  t.kind = Kind::Builtin;
  t.builtin = std::move(name);
  return t;
}

const std::vector<std::string>& builtin_target_names() {
  static const std::vector<std::string> names{"f1", "f2", "f3", "f4"};
  return names;
}

namespace {

PowerSeries expand_rational(const std::vector<Complex>& poles,
                            const std::vector<Complex>& residues, std::size_t n) {
  // 1/(z - p) = -(1/p) sum (z/p)^k, so c_k = -sum_j res_j p_j^{-(k+1)}.
  PowerSeries out(n);
  for (std::size_t j = 0; j < poles.size(); ++j) {
    const Complex inv = Complex{1.0, 0.0} / poles[j];
    Complex pw = inv;
    for (std::size_t k = 0; k < n; ++k) {
      out[k] -= residues[j] * pw;
      pw *= inv;
    }
  }
  return out;
}

PowerSeries expand_builtin(const std::string& name, const SpaceSpec& spec) {
  const std::size_t n = spec.truncation();
  if (name == "f1") return expand_rational({Complex{2.0, 0.0}}, {Complex{1.0, 0.0}}, n);
  if (name == "f2") {
    // Partial fractions of 1/((z-p)(z-conj p)) with p = 1+i.
    return expand_rational({Complex{1.0, 1.0}, Complex{1.0, -1.0}},
                           {Complex{0.0, -0.5}, Complex{0.0, 0.5}}, n);
  }
  if (name == "f3") {
    PowerSeries out(n);
    const Complex params[3] = {Complex{0.4, 0.0}, Complex{-0.3, 0.4}, Complex{0.2, -0.5}};
    const double weights[3] = {0.6, 0.3, 0.1};
    for (int j = 0; j < 3; ++j) {
      out.axpy(Complex{weights[j], 0.0}, normalized_kernel(spec, params[j]).series);
    }
    return out;
  }
  // f4
  PowerSeries out(n);
  out[1] = Complex{1.0, 0.0};
  return out;
}

}  // namespace

PowerSeries TargetSpec::expand(const SpaceSpec& spec) const {
  const std::size_t n = spec.truncation();
  switch (kind) {
    case Kind::Taylor: {
      detail::require(taylor.size() <= n,
                      "TargetSpec: taylor coefficient list exceeds the truncation");
      PowerSeries out(n);
      for (std::size_t k = 0; k < taylor.size(); ++k) out[k] = taylor[k];
      detail::require(out.all_finite(), "TargetSpec: taylor coefficients must be finite");
      return out;
    }
    case Kind::Rational:
      return expand_rational(poles, residues, n);
    case Kind::Builtin:
      return expand_builtin(builtin, spec);
  }
  throw std::invalid_argument("TargetSpec: unknown kind");
}

}  // namespace rka
