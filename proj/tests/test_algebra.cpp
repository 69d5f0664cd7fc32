#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlicz_wiener/algebra.hpp"
#include "orlicz_wiener/error.hpp"

using namespace orlicz_wiener;

namespace {

AlgebraSpace unit_space() {
  return AlgebraSpace::parse("pow:p=1;pow:p=1;const:1;const:1;const:1;const:1");
}

// Four-sum oracle with sums run well past both supports.
double four_sum_oracle(const LaurentPolynomial& f, const LaurentPolynomial& g, int k, Side side) {
  const int reach = f.bound() + g.bound() + std::abs(k) + 2;
  auto a = [&](int n) { return std::abs(f[n]); };
  auto b = [&](int n) { return std::abs(g[n]); };
  double s = 0.0;
  if (side == Side::Negative) {
    for (int j = 0; j <= reach; ++j) s += a(j) * b(-k - j);
    for (int j = 1; j <= k / 2; ++j) s += a(-j) * b(-k + j);
    for (int j = 0; j <= reach; ++j) s += b(j) * a(-k - j);
    for (int j = 1; j <= k / 2; ++j) s += b(-j) * a(-k + j);
  } else {
    for (int j = 1; j <= reach; ++j) s += a(-j) * b(k + j);
    for (int j = 0; j <= k / 2; ++j) s += a(j) * b(k - j);
    for (int j = 1; j <= reach; ++j) s += b(-j) * a(k + j);
    for (int j = 0; j <= k / 2; ++j) s += b(j) * a(k - j);
  }
  return s;
}

}  // namespace

TEST_CASE("AlgebraSpace constants") {
  const auto sp = unit_space();
  CHECK(sp.c_phi() == 1.0);
  CHECK(sp.c_minus() == 2.0);
  CHECK(sp.c_plus() == 2.0);
  CHECK(theorem_constant(sp) == 9.0);
  CHECK(sp.phi().index_class() == IndexClass::Negative);
  CHECK(sp.rho().index_class() == IndexClass::NonNegative);
  CHECK(AlgebraSpace::parse(sp.spec()).spec() == sp.spec());
  CHECK_THROWS_AS(AlgebraSpace::parse("pow:p=1;pow:p=1;const:1"), ConfigError);
  CHECK_THROWS_AS(AlgebraSpace::parse("pow:p=0.5;pow:p=1;const:1;const:1;const:1;const:1"), ConfigError);
}

TEST_CASE("theorem_constant examples") {
  CHECK(theorem_constant(1, 1, 1, 1) == 9.0);
  for (const double beta : {0.0, 0.5, 1.0, 2.0}) {
    const double c = std::pow(2.0, beta);
    CHECK(theorem_constant(1, 1, c, 1) == doctest::Approx(5.0 + 4.0 * c));
    const auto sp = horbach_space(2.0, 1.5, 1.0, beta);
    CHECK(theorem_constant(sp) == doctest::Approx(1.0 + 2.0 * 2.0 * 2.0 + 2.0 * 2.0 * c));
  }
  CHECK(theorem_constant(2, 2, 2, 2) == 25.0);
}

TEST_CASE("wnf_norm examples") {
  const auto sp = unit_space();
  const auto zero = wnf_norm(LaurentPolynomial{}, sp);
  CHECK(zero.wiener == 0.0);
  CHECK(zero.minus == 0.0);
  CHECK(zero.plus == 0.0);
  CHECK(zero.total == 0.0);

  const auto one = wnf_norm(LaurentPolynomial{{0, 1.0}}, sp);
  CHECK(one.wiener == 1.0);
  CHECK(one.minus == 0.0);
  CHECK(one.plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one.total == doctest::Approx(2.0).epsilon(1e-12));

  const auto sp2 = AlgebraSpace::parse("pow:p=2;pow:p=1;const:1;pow:alpha=1;const:1;const:1");
  CHECK(wnf_norm(LaurentPolynomial{{-1, 1.0}}, sp2).minus == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
}

TEST_CASE("verify_theorem examples") {
  const auto sp = unit_space();
  const auto w0 = verify_theorem(LaurentPolynomial{}, LaurentPolynomial{}, sp);
  CHECK(w0.lhs == 0.0);
  CHECK(w0.rhs == 0.0);
  CHECK(w0.holds);
  CHECK(w0.ratio() == 0.0);

  const auto w = verify_theorem(LaurentPolynomial{{0, 1.0}}, LaurentPolynomial{{0, 1.0}}, sp);
  CHECK(w.lhs == doctest::Approx(2.0));
  CHECK(w.rhs == doctest::Approx(36.0));
  CHECK(w.constant == 9.0);
  CHECK(w.holds);
}

TEST_CASE("make_witness slack") {
  CHECK(make_witness(1.0 + 0.5e-9, 1.0, 1.0).holds);
  CHECK_FALSE(make_witness(1.0 + 2e-9, 1.0, 1.0).holds);
  CHECK(std::isinf(make_witness(1.0, 0.0, 1.0).ratio()));
}

TEST_CASE("verify_one_sided examples") {
  const auto sp = unit_space();
  for (const Side side : {Side::Negative, Side::NonNegative}) {
    CHECK(verify_one_sided(LaurentPolynomial{}, LaurentPolynomial{}, sp, side).holds);
  }
  // ||fg||_+ = 1, C_+ (1*1 + 1*1) = 4.
  const auto w = verify_one_sided(LaurentPolynomial{{0, 1.0}}, LaurentPolynomial{{0, 1.0}}, sp, Side::NonNegative);
  CHECK(w.lhs == doctest::Approx(1.0));
  CHECK(w.rhs == doctest::Approx(4.0));
  CHECK(w.holds);
}

TEST_CASE("assemble_theorem closes its chain") {
  const auto sp = AlgebraSpace::parse("expm1;powlog:p=1.5;log;pow:alpha=2;pow:alpha=0.5;const:2.5");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_element(static_cast<int>(seed % 11), 2 * seed, 0.5);
    const auto g = random_element(static_cast<int>(seed % 7), 2 * seed + 1, 3.0);
    const auto a = assemble_theorem(f, g, sp);
    CHECK(a.holds());
    CHECK(a.fg.total == doctest::Approx(a.fg.wiener + a.fg.minus + a.fg.plus));
    CHECK(a.theorem.lhs == doctest::Approx(a.fg.total));
  }
}

TEST_CASE("coefficient bound examples") {
  const LaurentPolynomial tinv{{-1, 1.0}};
  const auto w = verify_coefficient_bound(tinv, tinv, 2, Side::Negative);
  CHECK(w.lhs == doctest::Approx(1.0));
  CHECK(w.rhs == doctest::Approx(2.0));
  CHECK(w.holds);
  CHECK(w.fingerprint.k == 2);
  CHECK(w.fingerprint.side == Side::Negative);
  CHECK(four_sum_oracle(tinv, tinv, 2, Side::Negative) == 2.0);

  const auto g = random_element(5, 4);
  for (int k = 1; k < 8; ++k) {
    const auto z = verify_coefficient_bound(LaurentPolynomial{}, g, k, Side::Negative);
    CHECK(z.lhs == 0.0);
    CHECK(z.holds);
  }
  CHECK_THROWS_AS(verify_coefficient_bound(tinv, tinv, 0, Side::Negative), DomainError);
  CHECK_THROWS_AS(verify_coefficient_bound(tinv, tinv, -1, Side::NonNegative), DomainError);
  CHECK_NOTHROW(verify_coefficient_bound(tinv, tinv, 0, Side::NonNegative));
}

TEST_CASE("coefficient_bound matches the brute-force oracle and dominates") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto f = random_element(static_cast<int>(seed % 9), 7 * seed);
    const auto g = random_element(static_cast<int>((seed / 3) % 6), 7 * seed + 1);
    const auto fg = multiply(f, g);
    const int top = f.bound() + g.bound() + 1;
    for (int k = 1; k <= top; ++k) {
      const double rhs = coefficient_bound(f, g, k, Side::Negative);
      CHECK(rhs == doctest::Approx(four_sum_oracle(f, g, k, Side::Negative)).epsilon(1e-13));
      CHECK(std::abs(fg[-k]) <= rhs + 1e-12 * (1.0 + rhs));
    }
    for (int k = 0; k <= top; ++k) {
      const double rhs = coefficient_bound(f, g, k, Side::NonNegative);
      CHECK(rhs == doctest::Approx(four_sum_oracle(f, g, k, Side::NonNegative)).epsilon(1e-13));
      CHECK(std::abs(fg[k]) <= rhs + 1e-12 * (1.0 + rhs));
    }
  }
}

TEST_CASE("verify_weight_shift examples") {
  std::vector<double> n_values(64);
  for (std::size_t i = 0; i < n_values.size(); ++i) n_values[i] = static_cast<double>(i + 1);
  const auto nu = WeightSequence::table(n_values, 2.0, IndexClass::Negative);
  // Direct scan for k = 4: nu_4 = 4 <= 2 nu_j for j >= 2.
  for (std::size_t j = 2; j <= 64; ++j) CHECK(nu[4] <= 2.0 * nu[j]);
  const auto r = verify_weight_shift(nu, 64);
  CHECK(r.holds());
  CHECK(r.max_ratio <= 1.0);

  const auto c = verify_weight_shift(WeightSequence::constant(1.0, IndexClass::NonNegative), 200);
  CHECK(c.holds());
  CHECK(c.max_ratio == 1.0);
  CHECK(c.checked > 0);

  CHECK(verify_weight_shift(WeightSequence::power(1.0, IndexClass::Negative), 2000).holds());
}

TEST_CASE("horbach examples and identity") {
  CHECK(horbach_norm(LaurentPolynomial{{0, 1.0}}, 2.0, 3.0, 0.5, 2.0) == doctest::Approx(1.0));
  CHECK(horbach_norm(LaurentPolynomial{{-1, 1.0}}, 2.0, 1.0, 1.0, 0.0) == doctest::Approx(2.0));

  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  const double as[] = {0.0, 0.5, 1.0, 2.0};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const double p = ps[seed % 4], r = ps[(seed / 4) % 4];
    const double alpha = as[(seed / 2) % 4], beta = as[(seed / 8) % 4];
    const auto sp = horbach_space(p, r, alpha, beta);
    const auto f = random_element(static_cast<int>(seed % 20), seed);
    const auto n = wnf_norm(f, sp);
    const double h = horbach_norm(f, p, r, alpha, beta);
    CHECK(std::abs(n.total - n.wiener - h) <= 1e-10 * (1.0 + h));
  }
}

TEST_CASE("random_element") {
  CHECK(random_element(10, 42) == random_element(10, 42));
  CHECK_FALSE(random_element(10, 42) == random_element(10, 43));
  const auto z = random_element(0, 5);
  CHECK(z.degree() == 0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int s = static_cast<int>(seed % 12);
    const auto f = random_element(s, seed, 0.25);
    CHECK(f.degree() <= s);
    for (int k = -s; k <= s; ++k) {
      CHECK(std::abs(f[k].real()) <= 0.25);
      CHECK(std::abs(f[k].imag()) <= 0.25);
    }
  }
}
