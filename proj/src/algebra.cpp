#include "orlicz_wiener/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "orlicz_wiener/error.hpp"

namespace orlicz_wiener {

namespace {

std::vector<std::string_view> split_fields(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

WeightSequence require_class(WeightSequence nu, IndexClass cls, std::string_view name) {
  if (nu.index_class() != cls) {
    throw ConfigError("weight " + std::string(name) + " must belong to the " +
                      std::string(to_string(cls)) + " class");
  }
  return nu;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraSpace

AlgebraSpace::AlgebraSpace(OrliczFunction phi_fn, OrliczFunction psi_fn, WeightSequence phi,
                           WeightSequence w, WeightSequence psi, WeightSequence rho)
    : phi_fn_(phi_fn),
      psi_fn_(psi_fn),
      phi_(require_class(std::move(phi), IndexClass::Negative, "phi")),
      w_(require_class(std::move(w), IndexClass::Negative, "w")),
      psi_(require_class(std::move(psi), IndexClass::NonNegative, "psi")),
      rho_(require_class(std::move(rho), IndexClass::NonNegative, "rho")),
      c_phi_(delta2_constant(phi_)),
      c_w_(delta2_constant(w_)),
      c_psi_(delta2_constant(psi_)),
      c_rho_(delta2_constant(rho_)) {}

AlgebraSpace AlgebraSpace::parse(std::string_view spec) {
  const auto parts = split_fields(spec, ';');
  if (parts.size() != 6) {
    throw ConfigError("space spec needs six ';'-separated fields \"Phi;Psi;phi;w;psi;rho\", got " +
                      std::to_string(parts.size()));
  }
  return AlgebraSpace(OrliczFunction::parse(parts[0]), OrliczFunction::parse(parts[1]),
                      WeightSequence::parse(parts[2], IndexClass::Negative),
                      WeightSequence::parse(parts[3], IndexClass::Negative),
                      WeightSequence::parse(parts[4], IndexClass::NonNegative),
                      WeightSequence::parse(parts[5], IndexClass::NonNegative));
}

std::string AlgebraSpace::spec() const {
  return phi_fn_.spec() + ";" + psi_fn_.spec() + ";" + phi_.spec() + ";" + w_.spec() + ";" +
         psi_.spec() + ";" + rho_.spec();
}

double theorem_constant(double c_phi, double c_w, double c_psi, double c_rho) noexcept {
  return 1.0 + 2.0 * (1.0 + c_w) * c_phi + 2.0 * (1.0 + c_rho) * c_psi;
}

double theorem_constant(const AlgebraSpace& sp) noexcept {
  return theorem_constant(sp.c_phi(), sp.c_w(), sp.c_psi(), sp.c_rho());
}

NormReport wnf_norm(const LaurentPolynomial& f, const AlgebraSpace& sp, double tol) {
  const SplitCoefficients parts = split(f);
  NormReport r;
  r.wiener = wiener_norm(f);
  r.minus = luxemburg_norm(parts.negative, sp.phi_fn(), sp.phi(), sp.w(), tol);
  r.plus = luxemburg_norm(parts.nonnegative, sp.psi_fn(), sp.psi(), sp.rho(), tol);
  r.total = r.wiener + r.minus + r.plus;
  return r;
}

// ---------------------------------------------------------------------------
// Witnesses

std::string_view to_string(Side side) noexcept {
  return side == Side::Negative ? "negative" : "nonnegative";
}

std::string Fingerprint::replay_key() const {
  return suite + "/" + std::to_string(seed) + "/" + std::to_string(trial) + "/" +
         std::to_string(support_bound);
}

double InequalityWitness::ratio() const noexcept {
  if (rhs > 0.0) return lhs / rhs;
  return lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

InequalityWitness make_witness(double lhs, double rhs, double constant) {
  InequalityWitness w;
  w.lhs = lhs;
  w.rhs = rhs;
  w.constant = constant;
  w.holds = lhs <= rhs * (1.0 + kInequalitySlack);
  return w;
}

InequalityWitness verify_theorem(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                 const AlgebraSpace& sp, double tol) {
  const double c = theorem_constant(sp);
  const double lhs = wnf_norm(multiply(f, g), sp, tol).total;
  return make_witness(lhs, c * wnf_norm(f, sp, tol).total * wnf_norm(g, sp, tol).total, c);
}

namespace {

InequalityWitness one_sided_from(const NormReport& nf, const NormReport& ng,
                                 const NormReport& nfg, const AlgebraSpace& sp, Side side) {
  if (side == Side::Negative) {
    const double c = sp.c_minus();
    return make_witness(nfg.minus, c * (nf.wiener * ng.minus + ng.wiener * nf.minus), c);
  }
  const double c = sp.c_plus();
  return make_witness(nfg.plus, c * (nf.wiener * ng.plus + ng.wiener * nf.plus), c);
}

}  // namespace

InequalityWitness verify_one_sided(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                   const AlgebraSpace& sp, Side side, double tol) {
  return one_sided_from(wnf_norm(f, sp, tol), wnf_norm(g, sp, tol), wnf_norm(multiply(f, g), sp, tol),
                        sp, side);
}

TheoremAssembly assemble_theorem(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                 const AlgebraSpace& sp, double tol) {
  TheoremAssembly a;
  a.f = wnf_norm(f, sp, tol);
  a.g = wnf_norm(g, sp, tol);
  a.fg = wnf_norm(multiply(f, g), sp, tol);

  const double c = theorem_constant(sp);
  const double product = a.f.total * a.g.total;
  a.theorem = make_witness(a.fg.total, c * product, c);
  a.wiener = make_witness(a.fg.wiener, a.f.wiener * a.g.wiener, 1.0);
  a.minus = one_sided_from(a.f, a.g, a.fg, sp, Side::Negative);
  a.plus = one_sided_from(a.f, a.g, a.fg, sp, Side::NonNegative);

  const double relax = 1.0 + kInequalitySlack;
  a.minus_relaxed = a.minus.rhs <= 2.0 * sp.c_minus() * product * relax;
  a.plus_relaxed = a.plus.rhs <= 2.0 * sp.c_plus() * product * relax;
  const double bound_sum = a.wiener.rhs + a.minus.rhs + a.plus.rhs;
  a.chain_closes = a.fg.total <= bound_sum * relax && bound_sum <= c * product * relax;
  return a;
}

// ---------------------------------------------------------------------------
// Coefficient decomposition

double coefficient_bound(const LaurentPolynomial& f, const LaurentPolynomial& g, int k,
                         Side side) {
  const auto a = [&](int n) { return std::abs(f[n]); };
  const auto b = [&](int n) { return std::abs(g[n]); };
  // Terms beyond this index vanish for both polynomials.
  const int reach = std::max(f.bound(), g.bound());
  const int half = k / 2;

  double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
  if (side == Side::Negative) {
    for (int j = 0; j <= reach; ++j) {
      s1 += a(j) * b(-k - j);
      s3 += b(j) * a(-k - j);
    }
    for (int j = 1; j <= half; ++j) {
      s2 += a(-j) * b(-k + j);
      s4 += b(-j) * a(-k + j);
    }
  } else {
    for (int j = 1; j <= reach; ++j) {
      s1 += a(-j) * b(k + j);
      s3 += b(-j) * a(k + j);
    }
    for (int j = 0; j <= half; ++j) {
      s2 += a(j) * b(k - j);
      s4 += b(j) * a(k - j);
    }
  }
  return s1 + s2 + s3 + s4;
}

InequalityWitness verify_coefficient_bound(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                           int k, Side side) {
  if (side == Side::Negative && k < 1) {
    throw DomainError("negative-side coefficient bound needs k >= 1");
  }
  if (side == Side::NonNegative && k < 0) {
    throw DomainError("nonnegative-side coefficient bound needs k >= 0");
  }
  const LaurentPolynomial fg = multiply(f, g);
  InequalityWitness w;
  w.lhs = std::abs(fg[side == Side::Negative ? -k : k]);
  w.rhs = coefficient_bound(f, g, k, side);
  w.constant = 1.0;
  w.holds = w.lhs <= w.rhs + kCoefficientSlack * (1.0 + w.rhs);
  w.fingerprint.k = k;
  w.fingerprint.side = side;
  return w;
}

// ---------------------------------------------------------------------------
// Weight shift bound

ShiftReport verify_weight_shift(const WeightSequence& nu, std::size_t k_max) {
  if (k_max < 1) throw DomainError("verify_weight_shift requires k_max >= 1");
  const double c = delta2_constant(nu);
  const std::size_t first = nu.first();

  std::vector<double> table(k_max + 1, 0.0);
  for (std::size_t n = first; n <= k_max; ++n) table[n] = nu[n];

  ShiftReport report;
  const double slack = 1.0 + 1e-12;
  for (std::size_t k = first; k <= k_max; ++k) {
    const std::size_t j0 = std::max(first, k - k / 2);
    for (std::size_t j = j0; j <= k_max; ++j) {
      const double bound = c * table[j];
      ++report.checked;
      report.max_ratio = std::max(report.max_ratio, table[k] / bound);
      if (table[k] > bound * slack) {
        if (report.violations++ == 0) report.first_violation = {k, j};
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Classical two-sided weighted l^p special case

double horbach_norm(const LaurentPolynomial& f, double p, double r, double alpha, double beta) {
  if (!(p >= 1.0) || !(r >= 1.0) || !(alpha >= 0.0) || !(beta >= 0.0)) {
    throw DomainError("horbach_norm requires p, r >= 1 and alpha, beta >= 0");
  }
  double neg = 0.0;
  double pos = 0.0;
  for (int k = 1; k <= f.bound(); ++k) {
    neg += std::pow(std::abs(f[-k]), p) * std::pow(k + 1.0, alpha * p);
  }
  for (int k = 0; k <= f.bound(); ++k) {
    pos += std::pow(std::abs(f[k]), r) * std::pow(k + 1.0, beta * r);
  }
  return std::pow(neg, 1.0 / p) + std::pow(pos, 1.0 / r);
}

AlgebraSpace horbach_space(double p, double r, double alpha, double beta) {
  return AlgebraSpace(OrliczFunction::power(p), OrliczFunction::power(r),
                      WeightSequence::power(alpha, IndexClass::Negative),
                      WeightSequence::constant(1.0, IndexClass::Negative),
                      WeightSequence::power(beta, IndexClass::NonNegative),
                      WeightSequence::constant(1.0, IndexClass::NonNegative));
}

LaurentPolynomial random_element(int support, std::uint64_t seed, double scale) {
  if (support < 0) throw DomainError("random_element requires support >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-scale, scale);
  LaurentPolynomial f(support);
  for (int k = -support; k <= support; ++k) {
    const double re = coord(rng);
    const double im = coord(rng);
    f.set(k, {re, im});
  }
  return f;
}

}  // namespace orlicz_wiener
