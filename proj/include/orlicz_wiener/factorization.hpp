#pragma once

// Wiener-Hopf factorization b = G(b) b_- b_+ of a nonvanishing symbol with
// zero winding number, where
//   G(b) = exp((log b)_0),
//   b_+  = exp(sum_{n>=1} (log b)_n t^n),
//   b_-  = exp(sum_{n>=1} (log b)_{-n} t^{-n}).
// The logarithm is taken on a uniform grid, its Fourier series is truncated
// at |n| <= M, and the factors are exponentiated pointwise on the grid.

#include <cstddef>

#include "orlicz_wiener/algebra.hpp"
#include "orlicz_wiener/fourier.hpp"

namespace orlicz_wiener {

inline constexpr double kVanishingThreshold = 1e-12;

struct WindingDiagnostics {
  double min_modulus = 0.0;
  double turns = 0.0;  // total argument change / 2 pi
  int kappa = 0;
  double rounding_defect = 0.0;  // |turns - kappa|
};

/// Grid samples of exp(q); such a symbol has winding number zero.
GridSamples exp_samples(const LaurentPolynomial& q, std::size_t grid);

/// Unwraps arg v_j around the closed grid, choosing |step| < pi.
/// Throws VanishingSymbolError if some |v_j| < 1e-12 and UnderResolvedError
/// if any step reaches pi/2 in magnitude. Requires at least 8 samples.
WindingDiagnostics winding_number(const GridSamples& s);

/// ln|v_j| + i arg v_j along the continuous branch whose argument at
/// theta = 0 lies in (-pi, pi]. Throws IndexObstructionError if the
/// winding number is nonzero.
GridSamples log_symbol(const GridSamples& s);

struct FactorizationOptions {
  std::size_t grid = 256;
  int truncation = 64;
  double tol = 1e-8;
  /// Under-resolved unwrapping doubles the grid up to this size.
  std::size_t grid_cap = std::size_t{1} << 16;
};

struct FactorizationResult {
  int kappa = 0;
  Complex g{1.0, 0.0};
  LaurentPolynomial log_coeffs;  // (log b)_k, |k| <= M
  LaurentPolynomial b_minus;     // extracted to band M; indices > 0 are aliasing noise
  LaurentPolynomial b_plus;      // extracted to band M; indices < 0 are aliasing noise
  double residual = 0.0;         // max_j |b(theta_j) - G b_-(theta_j) b_+(theta_j)|
  double one_sidedness = 0.0;    // max stray coefficient of b_- (k > 0) or b_+ (k < 0)
  std::size_t grid = 0;
  int truncation = 0;
  WindingDiagnostics winding;
};

/// Factorizes a symbol given by its grid samples. Requires
/// grid >= 4 * truncation. Throws IndexObstructionError for nonzero winding
/// and TruncationError when the residual exceeds tol.
FactorizationResult factorize(const GridSamples& b, int truncation, double tol);

/// Samples b (refining the grid while unwrapping is under-resolved) and
/// factorizes. Requires grid >= 4 max(truncation, degree of b).
FactorizationResult factorize(const LaurentPolynomial& b, const FactorizationOptions& opts = {});

struct MembershipReport {
  NormReport b_plus;
  NormReport b_plus_inv;
  NormReport b_minus;
  NormReport b_minus_inv;

  bool all_finite() const noexcept;
};

/// W∩F norms of b_+^{±1} and b_-^{±1}; the inverses come from exponentiating
/// the negated logarithm parts on the result's grid.
MembershipReport membership(const FactorizationResult& res, const AlgebraSpace& sp,
                            double tol = kDefaultNormTol);

}  // namespace orlicz_wiener
