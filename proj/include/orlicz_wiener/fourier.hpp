#pragma once

// Trigonometric (Laurent) polynomials on the unit circle.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "orlicz_wiener/orlicz.hpp"

namespace orlicz_wiener {

using Complex = std::complex<double>;

/// f(t) = sum_{k=-N}^{N} f_k t^k with dense symmetric storage. Indices
/// outside [-N, N] read as zero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() : coeffs_(1) {}
  explicit LaurentPolynomial(int bound);
  LaurentPolynomial(std::initializer_list<std::pair<int, Complex>> terms);

  int bound() const noexcept { return bound_; }
  Complex operator[](int k) const noexcept {
    return (k < -bound_ || k > bound_) ? Complex{} : coeffs_[static_cast<std::size_t>(k + bound_)];
  }
  /// Sets f_k, widening the bound when needed.
  void set(int k, Complex value);

  /// Coefficients f_{-N}, ..., f_N.
  std::span<const Complex> dense() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  /// Smallest bound holding every nonzero coefficient (0 for the zero polynomial).
  int degree() const noexcept;
  /// Copy with all-zero extreme tails removed.
  LaurentPolynomial canonical() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) noexcept;

 private:
  int bound_ = 0;
  std::vector<Complex> coeffs_;
};

/// Values v_j at theta_j = 2 pi j / size, size a power of two.
class GridSamples {
 public:
  explicit GridSamples(std::vector<Complex> values);

  std::size_t size() const noexcept { return values_.size(); }
  double theta(std::size_t j) const noexcept;
  std::span<const Complex> values() const noexcept { return values_; }
  Complex operator[](std::size_t j) const noexcept { return values_[j]; }

 private:
  std::vector<Complex> values_;
};

bool is_power_of_two(std::size_t n) noexcept;

/// Samples f on the grid of `grid_size` points (exact trigonometric sum,
/// evaluated by FFT with index folding).
GridSamples sample(const LaurentPolynomial& f, std::size_t grid_size);

/// Discrete Fourier coefficients f_k = (1/N_g) sum_j v_j e^{-ik theta_j}
/// for |k| <= band. Requires band <= N_g/2 - 1 (ConfigError otherwise).
LaurentPolynomial fourier_coefficients(const GridSamples& s, int band);

/// sum_k f_k e^{ik theta} by direct summation.
Complex evaluate(const LaurentPolynomial& f, double theta);

/// Full convolution (fg)_n = sum_j f_j g_{n-j}; bound N_f + N_g.
LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// FFT route to the same product. Matches multiply() to rounding.
LaurentPolynomial multiply_fft(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// ||f||_W = sum_k |f_k|.
double wiener_norm(const LaurentPolynomial& f);

struct SplitCoefficients {
  CoefficientSequence negative;     // {f_{-k}}, k >= 1
  CoefficientSequence nonnegative;  // {f_k},    k >= 0
};

/// Index-faithful split into negative and nonnegative coefficient sequences,
/// each with trailing zeros trimmed.
SplitCoefficients split(const LaurentPolynomial& f);

/// Inverse of split.
LaurentPolynomial merge(const SplitCoefficients& parts);

}  // namespace orlicz_wiener
