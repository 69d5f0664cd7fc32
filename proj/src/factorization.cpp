#include "orlicz_wiener/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "orlicz_wiener/error.hpp"

namespace orlicz_wiener {

namespace {

constexpr double kPi = std::numbers::pi;

// Projection of the log coefficients onto indices in [lo, hi].
LaurentPolynomial band_part(const LaurentPolynomial& c, int lo, int hi) {
  LaurentPolynomial out(std::max(std::abs(lo), std::abs(hi)));
  for (int k = lo; k <= hi; ++k) out.set(k, c[k]);
  return out;
}

// Coefficients (to band m) of exp(sign * p) computed pointwise on the grid.
LaurentPolynomial exp_on_grid(const LaurentPolynomial& p, double sign, std::size_t grid, int m) {
  LaurentPolynomial scaled(p.bound());
  for (int k = -p.bound(); k <= p.bound(); ++k) scaled.set(k, sign * p[k]);
  return fourier_coefficients(exp_samples(scaled, grid), m);
}

void check_nonvanishing(const GridSamples& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (std::abs(s[j]) < kVanishingThreshold) {
      throw VanishingSymbolError("symbol vanishes (|b| < 1e-12) at grid point theta = " +
                                 format_number(s.theta(j)));
    }
  }
}

}  // namespace

GridSamples exp_samples(const LaurentPolynomial& q, std::size_t grid) {
  const GridSamples s = sample(q, grid);
  std::vector<Complex> v(grid);
  for (std::size_t j = 0; j < grid; ++j) v[j] = std::exp(s[j]);
  return GridSamples(std::move(v));
}

WindingDiagnostics winding_number(const GridSamples& s) {
  const std::size_t n = s.size();
  if (n < 8) throw ConfigError("winding_number needs at least 8 grid points");
  check_nonvanishing(s);

  WindingDiagnostics d;
  d.min_modulus = std::abs(s[0]);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    d.min_modulus = std::min(d.min_modulus, std::abs(s[j]));
    const double step = std::arg(s[(j + 1) % n] / s[j]);
    if (std::abs(step) >= kPi / 2) {
      throw UnderResolvedError("argument jumps by " + format_number(step) + " between theta = " +
                               format_number(s.theta(j)) + " and the next grid point; refine the grid");
    }
    total += step;
  }
  d.turns = total / (2.0 * kPi);
  d.kappa = static_cast<int>(std::lround(d.turns));
  d.rounding_defect = std::abs(d.turns - d.kappa);
  return d;
}

GridSamples log_symbol(const GridSamples& s) {
  const WindingDiagnostics d = winding_number(s);
  if (d.kappa != 0) {
    throw IndexObstructionError(d.kappa, "winding number " + std::to_string(d.kappa) +
                                             " is nonzero; the symbol has no continuous logarithm");
  }
  const std::size_t n = s.size();
  std::vector<Complex> out(n);
  double arg = std::arg(s[0]);
  if (arg == -kPi) arg = kPi;
  out[0] = {std::log(std::abs(s[0])), arg};
  for (std::size_t j = 1; j < n; ++j) {
    arg += std::arg(s[j] / s[j - 1]);
    out[j] = {std::log(std::abs(s[j])), arg};
  }
  return GridSamples(std::move(out));
}

FactorizationResult factorize(const GridSamples& b, int truncation, double tol) {
  const std::size_t n = b.size();
  if (truncation < 1) throw ConfigError("truncation must be at least 1");
  if (n < 4 * static_cast<std::size_t>(truncation)) {
    throw ConfigError("grid of size " + std::to_string(n) + " is too small for truncation " +
                      std::to_string(truncation) + " (need grid >= 4 M)");
  }

  FactorizationResult r;
  r.grid = n;
  r.truncation = truncation;
  r.winding = winding_number(b);
  r.kappa = r.winding.kappa;
  if (r.kappa != 0) {
    throw IndexObstructionError(r.kappa, "winding number " + std::to_string(r.kappa) +
                                             " is nonzero; no Wiener-Hopf factorization with G(b)b_-b_+");
  }

  r.log_coeffs = fourier_coefficients(log_symbol(b), truncation);
  r.g = std::exp(r.log_coeffs[0]);
  r.b_plus = exp_on_grid(band_part(r.log_coeffs, 1, truncation), 1.0, n, truncation);
  r.b_minus = exp_on_grid(band_part(r.log_coeffs, -truncation, -1), 1.0, n, truncation);

  const GridSamples sp = sample(r.b_plus, n);
  const GridSamples sm = sample(r.b_minus, n);
  for (std::size_t j = 0; j < n; ++j) {
    r.residual = std::max(r.residual, std::abs(b[j] - r.g * sm[j] * sp[j]));
  }
  for (int k = 1; k <= truncation; ++k) {
    r.one_sidedness = std::max({r.one_sidedness, std::abs(r.b_plus[-k]), std::abs(r.b_minus[k])});
  }

  if (!(r.residual <= tol)) {
    throw TruncationError(r.residual, "factorization residual " + format_number(r.residual) +
                                          " exceeds tolerance " + format_number(tol) +
                                          "; increase truncation and grid size");
  }
  return r;
}

FactorizationResult factorize(const LaurentPolynomial& b, const FactorizationOptions& opts) {
  if (!is_power_of_two(opts.grid)) {
    throw ConfigError("grid size " + std::to_string(opts.grid) + " is not a power of two");
  }
  const auto need = 4 * static_cast<std::size_t>(std::max(opts.truncation, b.degree()));
  if (opts.grid < need) {
    throw ConfigError("grid of size " + std::to_string(opts.grid) +
                      " is too small (need grid >= 4 max(truncation, degree) = " +
                      std::to_string(need) + ")");
  }

  std::size_t grid = opts.grid;
  while (true) {
    const GridSamples s = sample(b, grid);
    try {
      winding_number(s);
    } catch (const UnderResolvedError&) {
      if (grid * 2 > opts.grid_cap) throw;
      grid *= 2;
      continue;
    }
    return factorize(s, opts.truncation, opts.tol);
  }
}

bool MembershipReport::all_finite() const noexcept {
  return std::isfinite(b_plus.total) && std::isfinite(b_plus_inv.total) &&
         std::isfinite(b_minus.total) && std::isfinite(b_minus_inv.total);
}

MembershipReport membership(const FactorizationResult& res, const AlgebraSpace& sp, double tol) {
  const int m = res.truncation;
  const LaurentPolynomial a_plus = band_part(res.log_coeffs, 1, m);
  const LaurentPolynomial a_minus = band_part(res.log_coeffs, -m, -1);

  MembershipReport out;
  out.b_plus = wnf_norm(res.b_plus, sp, tol);
  out.b_plus_inv = wnf_norm(exp_on_grid(a_plus, -1.0, res.grid, m), sp, tol);
  out.b_minus = wnf_norm(res.b_minus, sp, tol);
  out.b_minus_inv = wnf_norm(exp_on_grid(a_minus, -1.0, res.grid, m), sp, tol);
  return out;
}

}  // namespace orlicz_wiener
