#include "orlicz_wiener/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "fft.hpp"
#include "orlicz_wiener/error.hpp"

namespace orlicz_wiener {

namespace detail {

namespace {
// FFTW planning is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void fft(std::vector<std::complex<double>>& data, FftDirection dir) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  const int n = static_cast<int>(data.size());
  const int sign = dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(int bound) {
  if (bound < 0) throw DomainError("Laurent polynomial bound must be nonnegative");
  bound_ = bound;
  coeffs_.assign(static_cast<std::size_t>(2 * bound + 1), Complex{});
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<int, Complex>> terms)
    : coeffs_(1) {
  for (const auto& [k, v] : terms) set(k, v);
}

void LaurentPolynomial::set(int k, Complex value) {
  const int need = std::abs(k);
  if (need > bound_) {
    std::vector<Complex> wider(static_cast<std::size_t>(2 * need + 1));
    std::copy(coeffs_.begin(), coeffs_.end(), wider.begin() + (need - bound_));
    coeffs_ = std::move(wider);
    bound_ = need;
  }
  coeffs_[static_cast<std::size_t>(k + bound_)] = value;
}

bool LaurentPolynomial::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex v) { return v == Complex{}; });
}

int LaurentPolynomial::degree() const noexcept {
  for (int n = bound_; n > 0; --n) {
    if ((*this)[n] != Complex{} || (*this)[-n] != Complex{}) return n;
  }
  return 0;
}

LaurentPolynomial LaurentPolynomial::canonical() const {
  const int n = degree();
  LaurentPolynomial out(n);
  for (int k = -n; k <= n; ++k) out.coeffs_[static_cast<std::size_t>(k + n)] = (*this)[k];
  return out;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) noexcept {
  const int n = std::max(a.bound_, b.bound_);
  for (int k = -n; k <= n; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Grid sampling and coefficient extraction

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

GridSamples::GridSamples(std::vector<Complex> values) : values_(std::move(values)) {
  if (!is_power_of_two(values_.size())) {
    throw ConfigError("grid size " + std::to_string(values_.size()) + " is not a power of two");
  }
}

double GridSamples::theta(std::size_t j) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(values_.size());
}

GridSamples sample(const LaurentPolynomial& f, std::size_t grid_size) {
  if (!is_power_of_two(grid_size)) {
    throw ConfigError("grid size " + std::to_string(grid_size) + " is not a power of two");
  }
  // e^{ik theta_j} depends on k only modulo the grid size, so folding the
  // coefficients is exact at the grid points.
  const auto n = static_cast<long long>(grid_size);
  std::vector<Complex> buf(grid_size);
  for (int k = -f.bound(); k <= f.bound(); ++k) {
    buf[static_cast<std::size_t>(((k % n) + n) % n)] += f[k];
  }
  detail::fft(buf, detail::FftDirection::Backward);
  return GridSamples(std::move(buf));
}

LaurentPolynomial fourier_coefficients(const GridSamples& s, int band) {
  const auto n = s.size();
  if (band < 0 || 2 * static_cast<std::size_t>(band) + 2 > n) {
    throw ConfigError("band " + std::to_string(band) + " too large for grid of size " +
                      std::to_string(n) + " (need band <= N_g/2 - 1)");
  }
  std::vector<Complex> buf(s.values().begin(), s.values().end());
  detail::fft(buf, detail::FftDirection::Forward);
  const double scale = 1.0 / static_cast<double>(n);
  LaurentPolynomial f(band);
  for (int k = -band; k <= band; ++k) {
    const auto idx = static_cast<std::size_t>(k >= 0 ? k : static_cast<long long>(n) + k);
    f.set(k, buf[idx] * scale);
  }
  return f;
}

Complex evaluate(const LaurentPolynomial& f, double theta) {
  Complex sum{};
  for (int k = -f.bound(); k <= f.bound(); ++k) {
    if (f[k] != Complex{}) sum += f[k] * std::polar(1.0, static_cast<double>(k) * theta);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Algebra on coefficients

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  const int nf = f.bound();
  const int ng = g.bound();
  std::vector<Complex> acc(static_cast<std::size_t>(2 * (nf + ng) + 1));
  const auto fd = f.dense();
  const auto gd = g.dense();
  // fd[i] holds f_{i - nf}; the product index is (i - nf) + (j - ng).
  for (std::size_t i = 0; i < fd.size(); ++i) {
    if (fd[i] == Complex{}) continue;
    for (std::size_t j = 0; j < gd.size(); ++j) acc[i + j] += fd[i] * gd[j];
  }
  LaurentPolynomial h(nf + ng);
  for (int k = -(nf + ng); k <= nf + ng; ++k) h.set(k, acc[static_cast<std::size_t>(k + nf + ng)]);
  return h;
}

LaurentPolynomial multiply_fft(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  const int band = f.bound() + g.bound();
  std::size_t n = 2;
  while (n < 2 * static_cast<std::size_t>(band) + 2) n *= 2;
  const GridSamples sf = sample(f, n);
  const GridSamples sg = sample(g, n);
  std::vector<Complex> prod(n);
  for (std::size_t j = 0; j < n; ++j) prod[j] = sf[j] * sg[j];
  return fourier_coefficients(GridSamples(std::move(prod)), band);
}

double wiener_norm(const LaurentPolynomial& f) {
  double sum = 0.0;
  for (const Complex v : f.dense()) sum += std::abs(v);
  return sum;
}

SplitCoefficients split(const LaurentPolynomial& f) {
  SplitCoefficients parts;
  parts.negative.index_class = IndexClass::Negative;
  parts.nonnegative.index_class = IndexClass::NonNegative;
  for (int k = 1; k <= f.bound(); ++k) parts.negative.values.push_back(f[-k]);
  for (int k = 0; k <= f.bound(); ++k) parts.nonnegative.values.push_back(f[k]);
  auto trim = [](std::vector<Complex>& v) {
    while (!v.empty() && v.back() == Complex{}) v.pop_back();
  };
  trim(parts.negative.values);
  trim(parts.nonnegative.values);
  return parts;
}

LaurentPolynomial merge(const SplitCoefficients& parts) {
  if (parts.negative.index_class != IndexClass::Negative ||
      parts.nonnegative.index_class != IndexClass::NonNegative) {
    throw ConfigError("merge: parts carry the wrong index classes");
  }
  const auto bound = static_cast<int>(
      std::max(parts.negative.values.size(),
               parts.nonnegative.values.empty() ? 0 : parts.nonnegative.values.size() - 1));
  LaurentPolynomial f(bound);
  for (std::size_t i = 0; i < parts.negative.values.size(); ++i) {
    f.set(-static_cast<int>(i + 1), parts.negative.values[i]);
  }
  for (std::size_t i = 0; i < parts.nonnegative.values.size(); ++i) {
    f.set(static_cast<int>(i), parts.nonnegative.values[i]);
  }
  return f;
}

}  // namespace orlicz_wiener
