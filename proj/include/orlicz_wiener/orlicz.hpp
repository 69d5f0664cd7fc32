#pragma once

// Orlicz functions, weight sequences and the Luxemburg norm of the
// two-weighted Orlicz sequence space l^Phi_{phi,w}: the norm of c is
//
//   inf { lambda > 0 : sum_n Phi(|c_n| phi_n / lambda) w_n <= 1 }.
//
// Everything here works on finitely supported sequences.

#include <complex>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace orlicz_wiener {

/// Index set of a one-sided sequence. `Negative` sequences are indexed by
/// {1, 2, ...} (the magnitudes of negative Fourier indices), `NonNegative`
/// ones by {0, 1, ...}.
enum class IndexClass { Negative, NonNegative };

constexpr std::size_t first_index(IndexClass cls) noexcept {
  return cls == IndexClass::Negative ? 1 : 0;
}

std::string_view to_string(IndexClass cls) noexcept;

/// Convex, nondecreasing Phi on [0, inf) with Phi(0) = 0 from one of the
/// builtin families:
///   pow:p=<p>     Phi(x) = x^p,             p >= 1
///   expm1         Phi(x) = e^x - 1
///   powlog:p=<p>  Phi(x) = x^p ln(1 + x),   p >= 1
class OrliczFunction {
 public:
  enum class Family { Power, ExpMinusOne, PowerLog };

  static OrliczFunction power(double p);
  static OrliczFunction exp_minus_one();
  static OrliczFunction power_log(double p);

  /// Parses a canonical spec string; throws ConfigError on anything else.
  static OrliczFunction parse(std::string_view spec);

  /// Phi(x). Throws DomainError for negative or NaN x.
  double operator()(double x) const;

  Family family() const noexcept { return family_; }
  /// p for the Power and PowerLog families, 1 for ExpMinusOne.
  double exponent() const noexcept { return p_; }
  std::string spec() const;

  friend bool operator==(const OrliczFunction&, const OrliczFunction&) = default;

 private:
  OrliczFunction(Family family, double p) : family_(family), p_(p) {}
  Family family_;
  double p_;
};

/// Positive weight sequence {nu_n} over the index set of its class, with the
/// constant of the Delta_2 condition nu_{2n} <= C nu_n.
///   pow:alpha=<a>  nu_n = (n+1)^a,     C = 2^a
///   log            nu_n = ln(e + n),   C = max_n ln(e+2n)/ln(e+n)
///   const:<c>      nu_n = c,           C = 1
///   table:<path>   explicit values, last value held constant beyond the
///                  table; C is user-supplied and checked on demand
class WeightSequence {
 public:
  enum class Family { Power, Log, Const, Explicit };

  static WeightSequence power(double alpha, IndexClass cls);
  static WeightSequence log(IndexClass cls);
  static WeightSequence constant(double c, IndexClass cls);
  /// values[i] is the weight at index first_index(cls) + i. The table is
  /// not required to be a valid weight; validate_weight reports defects.
  static WeightSequence table(std::vector<double> values, double declared_delta2,
                              IndexClass cls, std::string source = {});
  /// Reads a JSON table file {"values": [...], "delta2": C}.
  static WeightSequence load_table(const std::filesystem::path& path, IndexClass cls);

  static WeightSequence parse(std::string_view spec, IndexClass cls);

  /// nu_n. Throws DomainError if n is below the first index of the class.
  double operator[](std::size_t n) const;

  Family family() const noexcept { return family_; }
  IndexClass index_class() const noexcept { return cls_; }
  double parameter() const noexcept { return param_; }
  std::size_t first() const noexcept { return first_index(cls_); }
  /// Declared (Explicit) or analytic (builtin) Delta_2 constant, unchecked.
  double declared_delta2() const noexcept { return delta2_; }
  std::size_t table_size() const noexcept { return table_.size(); }
  std::string spec() const;

 private:
  WeightSequence(Family family, double param, IndexClass cls, double delta2)
      : family_(family), param_(param), cls_(cls), delta2_(delta2) {}

  Family family_;
  double param_;
  IndexClass cls_;
  double delta2_;
  std::vector<double> table_;
  std::string source_;
};

struct WeightReport {
  std::size_t n_max = 0;
  bool positive = true;
  bool nondecreasing = true;
  bool delta2 = true;
  double empirical_sup = 0.0;  // max nu_{2n}/nu_n over 1 <= n <= n_max
  double declared = 0.0;
  std::vector<std::string> violations;

  bool passes() const noexcept { return positive && nondecreasing && delta2; }
};

/// Checks positivity, monotonicity and the Delta_2 bound for indices up to
/// n_max. Failures are recorded in the report. Requires n_max >= 2.
WeightReport validate_weight(const WeightSequence& nu, std::size_t n_max);

/// The Delta_2 constant. Builtin families return their analytic constant;
/// Explicit tables are validated first and throw InvalidWeightError when the
/// declared constant (or monotonicity/positivity) fails.
double delta2_constant(const WeightSequence& nu);

/// Finitely supported one-sided coefficient sequence;
/// values[i] sits at index first_index(index_class) + i.
struct CoefficientSequence {
  IndexClass index_class = IndexClass::NonNegative;
  std::vector<std::complex<double>> values;

  std::size_t first() const noexcept { return first_index(index_class); }
  bool is_zero() const noexcept;
};

/// S(lambda) = sum_n Phi(|c_n| phi_n / lambda) w_n for a fixed sequence.
/// Weighted magnitudes are cached at construction.
class Modular {
 public:
  Modular(const CoefficientSequence& c, const OrliczFunction& phi_fn,
          const WeightSequence& phi, const WeightSequence& w);

  double operator()(double lambda) const;

  /// max_n |c_n| phi_n, the natural scale of lambda.
  double scale() const noexcept { return scale_; }
  bool is_zero() const noexcept { return scale_ == 0.0; }

 private:
  OrliczFunction phi_fn_;
  std::vector<double> args_;     // |c_n| phi_n
  std::vector<double> weights_;  // w_n
  double scale_ = 0.0;
};

double modular(const CoefficientSequence& c, const OrliczFunction& phi_fn,
               const WeightSequence& phi, const WeightSequence& w, double lambda);

inline constexpr double kDefaultNormTol = 1e-12;
inline constexpr int kMaxBisectionSteps = 200;

/// Luxemburg norm to relative accuracy `tol` in (0, 1e-3]. The returned
/// value lambda always satisfies S(lambda) <= 1. Zero sequences give 0.
double luxemburg_norm(const CoefficientSequence& c, const OrliczFunction& phi_fn,
                      const WeightSequence& phi, const WeightSequence& w,
                      double tol = kDefaultNormTol);

/// Shortest round-trip decimal form, used in every spec string.
std::string format_number(double x);

}  // namespace orlicz_wiener
