#include "rka/space.hpp"

#include <algorithm>
#include <cmath>

namespace rka {

SpaceSpec::SpaceSpec(SpaceKind kind, double alpha, std::size_t truncation, double r_max)
    : kind_(kind), alpha_(alpha), truncation_(truncation), r_max_(r_max) {
  detail::require(truncation_ >= 16, "SpaceSpec: truncation must be >= 16");
  detail::require(r_max_ > 0.0 && r_max_ < 1.0, "SpaceSpec: r_max must lie in (0,1)");
  if (kind_ == SpaceKind::WeightedBergman) {
    detail::require(alpha_ > -1.0, "SpaceSpec: Bergman parameter alpha must exceed -1");
  }
  weights_.resize(truncation_);
  if (kind_ == SpaceKind::Hardy) {
    std::fill(weights_.begin(), weights_.end(), 1.0);
  } else {
    // h_k = k! Gamma(2+alpha) / Gamma(k+2+alpha), evaluated in log space so
    // the k ~ 500 entries neither overflow nor lose the leading digits.
    const double lg_base = std::lgamma(2.0 + alpha_);
    for (std::size_t k = 0; k < truncation_; ++k) {
      const double kk = static_cast<double>(k);
      weights_[k] = std::exp(std::lgamma(kk + 1.0) + lg_base - std::lgamma(kk + 2.0 + alpha_));
    }
  }
}

SpaceSpec SpaceSpec::hardy(std::size_t truncation, double r_max) {
  return SpaceSpec(SpaceKind::Hardy, 0.0, truncation, r_max);
}

SpaceSpec SpaceSpec::weighted_bergman(double alpha, std::size_t truncation, double r_max) {
  return SpaceSpec(SpaceKind::WeightedBergman, alpha, truncation, r_max);
}

double SpaceSpec::weight(std::size_t k) const {
  detail::require(k < truncation_, "weight: index out of range");
  return weights_[k];
}

double SpaceSpec::kernel_exponent() const {
  return kind_ == SpaceKind::Hardy ? 1.0 : 2.0 + alpha_;
}

bool SpaceSpec::operator==(const SpaceSpec& other) const {
  return kind_ == other.kind_ && alpha_ == other.alpha_ &&
         truncation_ == other.truncation_ && r_max_ == other.r_max_;
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  detail::require(all_finite(), "PowerSeries: coefficients must be finite");
}

bool PowerSeries::all_finite() const {
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& g) {
  detail::require(size() == g.size(), "PowerSeries: length mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += g.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& g) {
  detail::require(size() == g.size(), "PowerSeries: length mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= g.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex a) {
  for (Complex& c : coeffs_) c *= a;
  return *this;
}

void PowerSeries::axpy(Complex a, const PowerSeries& g) {
  detail::require(size() == g.size(), "PowerSeries: length mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += a * g.coeffs_[k];
}

Complex inner_product(const PowerSeries& f, const PowerSeries& g, const SpaceSpec& spec) {
  detail::require(f.size() == spec.truncation() && g.size() == spec.truncation(),
                  "inner_product: series length must equal the space truncation");
  const std::vector<double>& h = spec.weights();
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc += h[k] * f[k] * std::conj(g[k]);
  }
  return acc;
}

double norm(const PowerSeries& f, const SpaceSpec& spec) {
  detail::require(f.size() == spec.truncation(),
                  "norm: series length must equal the space truncation");
  const std::vector<double>& h = spec.weights();
  double acc = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc += h[k] * std::norm(f[k]);
  }
  return std::sqrt(acc);
}

Complex evaluate(const PowerSeries& f, Complex z) {
  detail::require(std::abs(z) < 1.0, "evaluate: point must lie in the open unit disc");
  Complex acc{0.0, 0.0};
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = acc * z + f[k];
  }
  return acc;
}

PowerSeries derivative(const PowerSeries& f) {
  PowerSeries out(f.size());
  for (std::size_t k = 1; k < f.size(); ++k) {
    out[k - 1] = static_cast<double>(k) * f[k];
  }
  return out;
}

Complex evaluate_derivative(const PowerSeries& f, Complex z, std::size_t m) {
  detail::require(std::abs(z) < 1.0, "evaluate_derivative: point must lie in the open unit disc");
  // Horner on the shifted coefficients (k)_m f_k z^{k-m} without materializing
  // the derivative series.
  Complex acc{0.0, 0.0};
  for (std::size_t k = f.size(); k-- > m;) {
    double ff = 1.0;
    for (std::size_t j = 0; j < m; ++j) ff *= static_cast<double>(k - j);
    acc = acc * z + ff * f[k];
  }
  return acc;
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries out(f.size());
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] == Complex{0.0, 0.0}) continue;
    const std::size_t jmax = n - i;
    for (std::size_t j = 0; j < std::min(g.size(), jmax); ++j) {
      out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

}  // namespace rka
