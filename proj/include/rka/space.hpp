// Function spaces on the unit disc (Hardy, weighted Bergman) and the
// truncated power-series representation every space element uses.
#pragma once

#include <cstddef>
#include <vector>

#include "rka/types.hpp"

namespace rka {

enum class SpaceKind { Hardy, WeightedBergman };

/// Which RKHS on the disc we work in, plus the numerical envelope:
/// series truncation length N and the largest parameter modulus r_max
/// for which the truncated kernel series is trusted.
///
/// Elements are Taylor series f(z) = sum c_k z^k and the inner product is
/// the weighted coefficient sum  <f,g> = sum_k h_k c_k conj(d_k), where
/// h_k = 1 for Hardy and h_k = k! Gamma(2+alpha) / Gamma(k+2+alpha) for
/// the weighted Bergman space A_alpha (normalized so h_0 = 1).
class SpaceSpec {
 public:
  static SpaceSpec hardy(std::size_t truncation = 512, double r_max = 0.995);
  static SpaceSpec weighted_bergman(double alpha, std::size_t truncation = 512,
                                    double r_max = 0.995);

  SpaceKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::size_t truncation() const { return truncation_; }
  double r_max() const { return r_max_; }

  /// Squared norm h_k of the monomial z^k. Strictly positive.
  double weight(std::size_t k) const;

  /// All monomial weights h_0..h_{N-1}, for hot loops.
  const std::vector<double>& weights() const { return weights_; }

  /// Exponent of the closed-form kernel 1/(1 - conj(w) z)^s:
  /// s = 1 for Hardy, s = 2 + alpha for weighted Bergman.
  double kernel_exponent() const;

  bool operator==(const SpaceSpec& other) const;

 private:
  SpaceSpec(SpaceKind kind, double alpha, std::size_t truncation, double r_max);

  SpaceKind kind_;
  double alpha_;
  std::size_t truncation_;
  double r_max_;
  std::vector<double> weights_;  // h_0..h_{N-1}, precomputed via log-gamma
};

/// Truncated Taylor coefficient sequence c_0..c_{N-1}. The length always
/// equals the truncation of the space the series lives in.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::size_t length) : coeffs_(length, Complex{0.0, 0.0}) {}
  explicit PowerSeries(std::vector<Complex> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  Complex& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  bool all_finite() const;

  PowerSeries& operator+=(const PowerSeries& g);
  PowerSeries& operator-=(const PowerSeries& g);
  PowerSeries& operator*=(Complex a);
  /// this += a * g
  void axpy(Complex a, const PowerSeries& g);

  friend PowerSeries operator+(PowerSeries f, const PowerSeries& g) { return f += g; }
  friend PowerSeries operator-(PowerSeries f, const PowerSeries& g) { return f -= g; }
  friend PowerSeries operator*(Complex a, PowerSeries f) { return f *= a; }

 private:
  std::vector<Complex> coeffs_;
};

/// Weighted coefficient inner product sum_k h_k f_k conj(g_k).
Complex inner_product(const PowerSeries& f, const PowerSeries& g, const SpaceSpec& spec);

/// sqrt(<f,f>); always real and non-negative.
double norm(const PowerSeries& f, const SpaceSpec& spec);

/// Horner evaluation at a point of the open disc (|z| < 1 required).
Complex evaluate(const PowerSeries& f, Complex z);

/// Termwise derivative, truncated back to the same length.
PowerSeries derivative(const PowerSeries& f);

/// Horner evaluation of the m-th termwise derivative at |z| < 1.
Complex evaluate_derivative(const PowerSeries& f, Complex z, std::size_t m);

/// Cauchy product truncated to the length of f.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g);

}  // namespace rka
