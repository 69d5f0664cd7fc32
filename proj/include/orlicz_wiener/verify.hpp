#pragma once

// Randomized verification suites. Every trial is a pure function of
// (suite, seed, trial index, support bound), so suites can fan out across
// threads and any single trial can be replayed from its fingerprint.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orlicz_wiener/algebra.hpp"

namespace orlicz_wiener {

namespace suite {
inline constexpr std::string_view kTheorem = "theorem";
inline constexpr std::string_view kOneSidedNegative = "one-sided-negative";
inline constexpr std::string_view kOneSidedNonNegative = "one-sided-nonnegative";
inline constexpr std::string_view kCoefficient = "coefficient";
}  // namespace suite

/// Draws a space from the cross product used by the suites:
/// Phi, Psi in {pow:p, powlog:p : p in {1, 1.5, 2, 3}} ∪ {expm1};
/// each weight in {pow:alpha : alpha in {0, 0.5, 1, 2}} ∪ {log, const:1, const:2.5}.
AlgebraSpace random_space(std::mt19937_64& rng);

struct Trial {
  LaurentPolynomial f;
  LaurentPolynomial g;
  AlgebraSpace space;
  Fingerprint fingerprint;
};

/// Deterministic trial generation. Each of f, g gets a support drawn from
/// [0, support_bound], a magnitude scale 10^U(-2,2) and one of four shapes
/// (full, nonnegative indices only, negative indices only, half the
/// coefficients zeroed).
Trial make_trial(std::string_view suite_name, std::uint64_t seed, std::uint64_t trial,
                 int support_bound);

struct TrialOutcome {
  InequalityWitness witness;  // the trial's worst (largest lhs/rhs) witness
  std::size_t violations = 0;
  /// Extra per-family ratios (the theorem suite reports its assembly links).
  std::vector<std::pair<std::string, double>> ratios;
};

/// Runs one trial of the named suite. Throws ConfigError for unknown suites.
TrialOutcome run_trial(std::string_view suite_name, std::uint64_t seed, std::uint64_t trial,
                       int support_bound, double tol = kDefaultNormTol);

/// Parses "<suite>/<seed>/<trial>/<support>" and reruns that trial.
TrialOutcome replay(std::string_view key, double tol = kDefaultNormTol);

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  int support_bound = 0;
  std::size_t violations = 0;
  /// Max lhs/rhs per inequality family, in a fixed order.
  std::vector<std::pair<std::string, double>> max_ratios;
  std::vector<InequalityWitness> witnesses;  // one per trial, in trial order
  std::vector<Fingerprint> failures;

  double max_ratio() const noexcept;
  bool holds() const noexcept { return violations == 0; }
};

SuiteReport run_suite(std::string_view suite_name, std::uint64_t seed, std::size_t trials,
                      int support_bound, double tol = kDefaultNormTol, unsigned threads = 0);

struct ShiftScanEntry {
  std::string weight;
  IndexClass index_class;
  ShiftReport report;
};

/// verify_weight_shift for every builtin weight of the sampling grid in
/// both index classes.
std::vector<ShiftScanEntry> run_weight_shift_scan(std::size_t k_max, unsigned threads = 0);

/// Worker count: `requested` if nonzero, else hardware concurrency, capped
/// by the ORLICZ_WIENER_THREADS environment variable when set.
unsigned worker_count(unsigned requested = 0);

}  // namespace orlicz_wiener
