#pragma once

// The Banach algebra W ∩ Fl^{Phi,Psi}_{phi,w;psi,rho}: its norm, the
// submultiplicativity constant, and brute-force checks of the inequalities
// that make it an algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "orlicz_wiener/fourier.hpp"
#include "orlicz_wiener/orlicz.hpp"

namespace orlicz_wiener {

/// (Phi, Psi, phi, w, psi, rho): Phi with weights phi, w (indexed from 1)
/// measures the negative coefficients, Psi with psi, rho (indexed from 0)
/// the nonnegative ones. Construction validates the weights and fixes the
/// Delta_2 constants.
class AlgebraSpace {
 public:
  AlgebraSpace(OrliczFunction phi_fn, OrliczFunction psi_fn, WeightSequence phi,
               WeightSequence w, WeightSequence psi, WeightSequence rho);

  /// "Phi;Psi;phi;w;psi;rho" with the canonical spec strings of each part.
  static AlgebraSpace parse(std::string_view spec);
  std::string spec() const;

  const OrliczFunction& phi_fn() const noexcept { return phi_fn_; }
  const OrliczFunction& psi_fn() const noexcept { return psi_fn_; }
  const WeightSequence& phi() const noexcept { return phi_; }
  const WeightSequence& w() const noexcept { return w_; }
  const WeightSequence& psi() const noexcept { return psi_; }
  const WeightSequence& rho() const noexcept { return rho_; }

  double c_phi() const noexcept { return c_phi_; }
  double c_w() const noexcept { return c_w_; }
  double c_psi() const noexcept { return c_psi_; }
  double c_rho() const noexcept { return c_rho_; }

  /// (1 + C_w) C_phi
  double c_minus() const noexcept { return (1.0 + c_w_) * c_phi_; }
  /// (1 + C_rho) C_psi
  double c_plus() const noexcept { return (1.0 + c_rho_) * c_psi_; }

 private:
  OrliczFunction phi_fn_, psi_fn_;
  WeightSequence phi_, w_, psi_, rho_;
  double c_phi_, c_w_, c_psi_, c_rho_;
};

/// C = 1 + 2(1 + C_w)C_phi + 2(1 + C_rho)C_psi.
double theorem_constant(double c_phi, double c_w, double c_psi, double c_rho) noexcept;
double theorem_constant(const AlgebraSpace& sp) noexcept;

struct NormReport {
  double wiener = 0.0;
  double minus = 0.0;
  double plus = 0.0;
  double total = 0.0;  // wiener + minus + plus
};

/// ||f||_W, ||f||_-, ||f||_+ and their sum.
NormReport wnf_norm(const LaurentPolynomial& f, const AlgebraSpace& sp,
                    double tol = kDefaultNormTol);

enum class Side { Negative, NonNegative };
std::string_view to_string(Side side) noexcept;

/// Enough to regenerate a random trial (suite, seed, trial index, support
/// bound) plus the supports and space that trial produced. `k` and `side`
/// are set for coefficient-bound witnesses.
struct Fingerprint {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  int support_bound = 0;
  int support_f = 0;
  int support_g = 0;
  std::string space;
  std::optional<int> k;
  std::optional<Side> side;

  /// "<suite>/<seed>/<trial>/<support_bound>", the form accepted by --replay.
  std::string replay_key() const;
};

inline constexpr double kInequalitySlack = 1e-9;
inline constexpr double kCoefficientSlack = 1e-12;

struct InequalityWitness {
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
  bool holds = true;
  Fingerprint fingerprint;

  /// lhs/rhs, with 0/0 read as 0.
  double ratio() const noexcept;
};

/// holds iff lhs <= rhs (1 + kInequalitySlack).
InequalityWitness make_witness(double lhs, double rhs, double constant);

/// ||fg||_{W∩F} <= C ||f||_{W∩F} ||g||_{W∩F}.
InequalityWitness verify_theorem(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                 const AlgebraSpace& sp, double tol = kDefaultNormTol);

/// Negative side:    ||fg||_- <= C_- (||f||_W ||g||_- + ||g||_W ||f||_-)
/// Nonnegative side: ||fg||_+ <= C_+ (||f||_W ||g||_+ + ||g||_W ||f||_+)
InequalityWitness verify_one_sided(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                   const AlgebraSpace& sp, Side side,
                                   double tol = kDefaultNormTol);

/// Every link of the assembly of the theorem from its one-sided parts:
///   ||fg||_W <= ||f||_W ||g||_W,
///   ||fg||_- <= C_-(||f||_W ||g||_- + ||g||_W ||f||_-) <= 2 C_- ||f|| ||g||,
///   ||fg||_+ <= C_+(||f||_W ||g||_+ + ||g||_W ||f||_+) <= 2 C_+ ||f|| ||g||,
///   ||fg||_{W∩F} <= sum of the three bounds <= C ||f|| ||g||,
/// where ||.|| is the W∩F norm. Each link is checked at kInequalitySlack.
struct TheoremAssembly {
  NormReport f, g, fg;
  InequalityWitness theorem;
  InequalityWitness wiener;
  InequalityWitness minus;
  InequalityWitness plus;
  bool minus_relaxed = true;
  bool plus_relaxed = true;
  bool chain_closes = true;

  bool holds() const noexcept {
    return theorem.holds && wiener.holds && minus.holds && plus.holds && minus_relaxed &&
           plus_relaxed && chain_closes;
  }
};

TheoremAssembly assemble_theorem(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                 const AlgebraSpace& sp, double tol = kDefaultNormTol);

/// Four-sum bound on |(fg)_{-k}| (negative side, k >= 1) or |(fg)_k|
/// (nonnegative side, k >= 0) in terms of a_n = |f_n|, b_n = |g_n|.
/// Returns only the right-hand side.
double coefficient_bound(const LaurentPolynomial& f, const LaurentPolynomial& g, int k, Side side);

/// lhs = |(fg)_{∓k}| from the exact convolution, rhs = coefficient_bound;
/// holds iff lhs <= rhs + kCoefficientSlack (1 + rhs). Invalid k throws
/// DomainError.
InequalityWitness verify_coefficient_bound(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                           int k, Side side);

struct ShiftReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double max_ratio = 0.0;  // max nu_k / (C nu_j)
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;  // (k, j)

  bool holds() const noexcept { return violations == 0; }
};

/// nu_k <= C nu_j (1 + 1e-12) for every k in the index set up to k_max and
/// every j with k - floor(k/2) <= j <= k_max. C is delta2_constant(nu).
ShiftReport verify_weight_shift(const WeightSequence& nu, std::size_t k_max);

/// (sum_{k>=1} |f_{-k}|^p (k+1)^{alpha p})^{1/p} + (sum_{k>=0} |f_k|^r (k+1)^{beta r})^{1/r}
double horbach_norm(const LaurentPolynomial& f, double p, double r, double alpha, double beta);

/// The space in which horbach_norm equals ||f||_- + ||f||_+:
/// (x^p, x^r; (n+1)^alpha, 1; (n+1)^beta, 1).
AlgebraSpace horbach_space(double p, double r, double alpha, double beta);

/// Coefficients f_k for |k| <= support with real and imaginary parts drawn
/// independently and uniformly from [-scale, scale] by a mt19937_64 seeded
/// with `seed`.
LaurentPolynomial random_element(int support, std::uint64_t seed, double scale = 1.0);

}  // namespace orlicz_wiener
