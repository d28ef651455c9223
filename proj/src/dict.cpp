#include "rka/dict.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rka {

namespace {

// Coefficients of the multiple kernel divided by its first nonzero one, i.e.
// d_k = binom(k, m) (h_m / h_k) conj(w)^{k-m} for k >= m, with a running
// rescale that keeps the recurrence in range at high derivative orders. The
// true coefficients are c_k = (m!/h_m) exp(log_rescale) d_k; the whole factor
// cancels on normalization.
PowerSeries scaled_kernel_series(const SpaceSpec& spec, Complex w, std::size_t m,
                                 double* log_rescale) {
  const std::size_t n = spec.truncation();
  PowerSeries out(n);
  const Complex wbar = std::conj(w);
  Complex d{1.0, 0.0};
  out[m] = d;
  double logs = 0.0;
  for (std::size_t k = m + 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double mm = static_cast<double>(m);
    d *= wbar * (kk / (kk - mm)) * (spec.weight(k - 1) / spec.weight(k));
    if (std::abs(d) > 1e140) {
      const double shrink = 1e-140;
      for (std::size_t j = m; j <= k - 1; ++j) out[j] *= shrink;
      d *= shrink;
      logs -= std::log(shrink);
    }
    out[k] = d;
  }
  if (log_rescale) *log_rescale = logs;
  return out;
}

double falling_factorial(double x, std::size_t m) {
  double acc = 1.0;
  for (std::size_t j = 0; j < m; ++j) acc *= x - static_cast<double>(j);
  return acc;
}

double rising_factorial(double x, std::size_t m) {
  double acc = 1.0;
  for (std::size_t j = 0; j < m; ++j) acc *= x + static_cast<double>(j);
  return acc;
}

double binomial(std::size_t n, std::size_t k) {
  double acc = 1.0;
  for (std::size_t j = 1; j <= k; ++j) {
    acc *= static_cast<double>(n - k + j) / static_cast<double>(j);
  }
  return acc;
}

// Integer power by repeated multiplication; std::pow on complex arguments
// goes through exp/log and turns 0^0 into NaN.
Complex ipow(Complex z, std::size_t m) {
  Complex acc{1.0, 0.0};
  for (std::size_t j = 0; j < m; ++j) acc *= z;
  return acc;
}

}  // namespace

ParameterTuple::ParameterTuple(std::vector<Complex> points) : points_(std::move(points)) {
  multiplicities_.resize(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    std::size_t count = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      if (points_[j] == points_[k]) ++count;
    }
    multiplicities_[k] = count;
  }
}

double ParameterTuple::max_modulus() const {
  double m = 0.0;
  for (const Complex& p : points_) m = std::max(m, std::abs(p));
  return m;
}

ParameterTuple ParameterTuple::with_appended(Complex b) const {
  std::vector<Complex> pts = points_;
  pts.push_back(b);
  return ParameterTuple(std::move(pts));
}

ParameterTuple ParameterTuple::without(std::size_t k) const {
  detail::require(k < points_.size(), "ParameterTuple::without: index out of range");
  std::vector<Complex> pts = points_;
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(k));
  return ParameterTuple(std::move(pts));
}

ParameterTuple ParameterTuple::with_replaced(std::size_t k, Complex b) const {
  detail::require(k < points_.size(), "ParameterTuple::with_replaced: index out of range");
  std::vector<Complex> pts = points_;
  pts[k] = b;
  return ParameterTuple(std::move(pts));
}

ParameterTuple merge_close(const ParameterTuple& tuple, double delta) {
  detail::require(delta > 0.0, "merge_close: delta must be positive");
  const std::size_t n = tuple.size();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(tuple.point(i) - tuple.point(j)) <= delta) {
        root[find(j)] = find(i);
      }
    }
  }
  std::vector<Complex> centroid(n, Complex{0.0, 0.0});
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    centroid[r] += tuple.point(i);
    ++count[r];
  }
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    pts[i] = centroid[r] / static_cast<double>(count[r]);
  }
  return ParameterTuple(std::move(pts));
}

MultipleKernel kernel(const SpaceSpec& spec, Complex w, std::size_t order) {
  detail::require(std::abs(w) <= spec.r_max(), "kernel: parameter modulus exceeds r_max");
  detail::require(order < spec.truncation() / 2,
                  "kernel: derivative order must stay below truncation/2");
  double log_rescale = 0.0;
  PowerSeries series = scaled_kernel_series(spec, w, order, &log_rescale);
  // c_m = m!/h_m, via log-gamma so moderate orders stay exact in range.
  const double scale = std::exp(std::lgamma(static_cast<double>(order) + 1.0) -
                                std::log(spec.weight(order)) + log_rescale);
  series *= Complex{scale, 0.0};
  detail::require(series.all_finite(), "kernel: coefficients overflow at this derivative order");
  return MultipleKernel{w, order, std::move(series)};
}

MultipleKernel normalized_kernel(const SpaceSpec& spec, Complex w, std::size_t order) {
  detail::require(std::abs(w) <= spec.r_max(),
                  "normalized_kernel: parameter modulus exceeds r_max");
  detail::require(order < spec.truncation() / 2,
                  "normalized_kernel: derivative order must stay below truncation/2");
  PowerSeries series = scaled_kernel_series(spec, w, order, nullptr);
  const double n = norm(series, spec);
  detail::require(n > 0.0 && std::isfinite(n),
                  "normalized_kernel: zero-norm kernel (truncation misuse)");
  series *= Complex{1.0 / n, 0.0};
  return MultipleKernel{w, order, std::move(series)};
}

Complex kernel_inner(const SpaceSpec& spec, Complex v, Complex w) {
  detail::require(std::abs(v) < 1.0 && std::abs(w) < 1.0,
                  "kernel_inner: points must lie in the open disc");
  return std::pow(Complex{1.0, 0.0} - std::conj(v) * w, -spec.kernel_exponent());
}

Complex kernel_inner_derivative(const SpaceSpec& spec, Complex v, std::size_t mv,
                                Complex w, std::size_t mw) {
  detail::require(std::abs(v) < 1.0 && std::abs(w) < 1.0,
                  "kernel_inner_derivative: points must lie in the open disc");
  // Mixed derivative of (1 - x w)^{-s} in x = conj(v) (mv times) and w
  // (mw times), by Leibniz on (s)_mv w^mv (1 - x w)^{-(s+mv)}.
  const double s = spec.kernel_exponent();
  const Complex x = std::conj(v);
  const Complex base = Complex{1.0, 0.0} - x * w;
  Complex acc{0.0, 0.0};
  const std::size_t jmax = std::min(mv, mw);
  for (std::size_t j = 0; j <= jmax; ++j) {
    const double cj = binomial(mw, j) * rising_factorial(s, mv) *
                      falling_factorial(static_cast<double>(mv), j) *
                      rising_factorial(s + static_cast<double>(mv), mw - j);
    acc += cj * ipow(w, mv - j) * ipow(x, mw - j) *
           std::pow(base, -(s + static_cast<double>(mv + mw - j)));
  }
  return acc;
}

double kernel_norm_closed(const SpaceSpec& spec, Complex w, std::size_t order) {
  const Complex sq = kernel_inner_derivative(spec, w, order, w, order);
  return std::sqrt(std::max(0.0, sq.real()));
}

}  // namespace rka
