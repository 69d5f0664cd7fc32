// Unit tests for Orlicz functions, weights, modulars and the Luxemburg norm.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "orlicz_wiener/error.hpp"
#include "orlicz_wiener/orlicz.hpp"

using namespace orlicz_wiener;

namespace {

std::vector<OrliczFunction> all_orlicz() {
  return {OrliczFunction::power(1.0),     OrliczFunction::power(1.5),
          OrliczFunction::power(2.0),     OrliczFunction::power(3.0),
          OrliczFunction::exp_minus_one(), OrliczFunction::power_log(1.0),
          OrliczFunction::power_log(2.5)};
}

std::vector<WeightSequence> all_weights(IndexClass cls) {
  return {WeightSequence::power(0.0, cls), WeightSequence::power(0.5, cls),
          WeightSequence::power(1.0, cls), WeightSequence::power(2.0, cls),
          WeightSequence::log(cls),        WeightSequence::constant(2.5, cls)};
}

CoefficientSequence random_sequence(std::mt19937_64& rng, IndexClass cls, std::size_t len,
                                    double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  CoefficientSequence c{cls, {}};
  for (std::size_t i = 0; i < len; ++i) c.values.emplace_back(u(rng), u(rng));
  return c;
}

// Closed-form weighted l^p norm: (sum |c_n|^p phi_n^p w_n)^{1/p}.
double weighted_lp(const CoefficientSequence& c, double p, const WeightSequence& phi,
                   const WeightSequence& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const std::size_t n = c.first() + i;
    s += std::pow(std::abs(c.values[i]), p) * std::pow(phi[n], p) * w[n];
  }
  return std::pow(s, 1.0 / p);
}

}  // namespace

TEST_CASE("eval_orlicz closed forms") {
  CHECK(OrliczFunction::power(2.0)(3.0) == 9.0);
  CHECK(OrliczFunction::exp_minus_one()(std::numbers::ln2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(OrliczFunction::power_log(1.0)(1.0) == doctest::Approx(std::numbers::ln2));
  for (const auto& phi : all_orlicz()) CHECK(phi(0.0) == 0.0);
}

TEST_CASE("eval_orlicz rejects negative arguments") {
  for (const auto& phi : all_orlicz()) {
    CHECK_THROWS_AS(phi(-1e-300), DomainError);
    CHECK_THROWS_AS(phi(std::nan("")), DomainError);
  }
}

TEST_CASE("Orlicz functions are nondecreasing, midpoint convex, with Phi(x)/x nondecreasing") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (const auto& phi : all_orlicz()) {
    for (int trial = 0; trial < 2000; ++trial) {
      double x1 = u(rng), x3 = u(rng);
      if (x1 > x3) std::swap(x1, x3);
      const double x2 = 0.5 * (x1 + x3);
      const double slack = 1e-12 * (1.0 + phi(x3));
      CHECK(phi(x1) <= phi(x2) + slack);
      CHECK(phi(x2) <= 0.5 * (phi(x1) + phi(x3)) + slack);
      if (x1 > 0.0) CHECK(phi(x1) / x1 <= phi(x3) / x3 * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("Orlicz spec strings") {
  CHECK(OrliczFunction::parse("pow:p=2") == OrliczFunction::power(2.0));
  CHECK(OrliczFunction::parse("expm1") == OrliczFunction::exp_minus_one());
  CHECK(OrliczFunction::parse("powlog:p=1.5").spec() == "powlog:p=1.5");
  CHECK_THROWS_AS(OrliczFunction::parse("pow:p=0.5"), ConfigError);
  CHECK_THROWS_AS(OrliczFunction::parse("pow:p=2x"), ConfigError);
  CHECK_THROWS_AS(OrliczFunction::parse("cosh"), ConfigError);
}

TEST_CASE("validate_weight") {
  SUBCASE("Power(1) passes with sup below 2") {
    const auto r = validate_weight(WeightSequence::power(1.0, IndexClass::Negative), 100);
    CHECK(r.passes());
    CHECK(r.empirical_sup <= 2.0);
    // (2n+1)/(n+1) is increasing; the scan max is at n = 100.
    CHECK(r.empirical_sup == doctest::Approx(201.0 / 101.0));
  }
  SUBCASE("Const(1) passes with sup exactly 1") {
    const auto nu = WeightSequence::constant(1.0, IndexClass::NonNegative);
    const auto r = validate_weight(nu, 100);
    CHECK(r.passes());
    CHECK(r.empirical_sup == 1.0);
    CHECK(delta2_constant(nu) == 1.0);
  }
  SUBCASE("decreasing table fails condition (ii)") {
    const auto nu = WeightSequence::table({1.0, 0.5, 2.0}, 4.0, IndexClass::Negative);
    const auto r = validate_weight(nu, 10);
    CHECK_FALSE(r.passes());
    CHECK_FALSE(r.nondecreasing);
    CHECK(r.positive);
    CHECK_THROWS_AS(delta2_constant(nu), InvalidWeightError);
  }
  SUBCASE("nonpositive table entries fail condition (i)") {
    const auto r = validate_weight(WeightSequence::table({0.0, 1.0}, 2.0, IndexClass::NonNegative), 4);
    CHECK_FALSE(r.positive);
  }
  SUBCASE("understated Delta_2 constant fails condition (iii)") {
    const auto nu = WeightSequence::table({1.0, 2.0, 3.0, 4.0}, 1.5, IndexClass::Negative);
    CHECK_FALSE(validate_weight(nu, 8).delta2);
    CHECK_THROWS_AS(delta2_constant(nu), InvalidWeightError);
  }
  SUBCASE("n_max below 2 is rejected") {
    CHECK_THROWS_AS(validate_weight(WeightSequence::log(IndexClass::Negative), 1), DomainError);
  }
}

TEST_CASE("delta2_constant for builtin families") {
  CHECK(delta2_constant(WeightSequence::power(0.0, IndexClass::Negative)) == 1.0);
  CHECK(delta2_constant(WeightSequence::constant(5.0, IndexClass::NonNegative)) == 1.0);
  CHECK(delta2_constant(WeightSequence::power(2.0, IndexClass::NonNegative)) == 4.0);

  // Scan oracle: ((2n+1)/(n+1))^2 stays below 4 and approaches it.
  double sup = 0.0;
  for (std::size_t n = 1; n <= 1000000; ++n) {
    const double r = (2.0 * n + 1.0) / (n + 1.0);
    sup = std::max(sup, r * r);
  }
  CHECK(sup <= 4.0);
  CHECK(sup > 4.0 - 1e-5);

  // Log: max of ln(e+2n)/ln(e+n), attained at n = 4.
  const double log_c = delta2_constant(WeightSequence::log(IndexClass::Negative));
  const double at4 = std::log(std::numbers::e + 8.0) / std::log(std::numbers::e + 4.0);
  CHECK(log_c == doctest::Approx(at4).epsilon(1e-15));
  CHECK(log_c == doctest::Approx(1.2452280913828129).epsilon(1e-14));
  CHECK(validate_weight(WeightSequence::log(IndexClass::NonNegative), 100000).passes());
}

TEST_CASE("weight spec strings and table files") {
  const auto nu = WeightSequence::parse("pow:alpha=0.5", IndexClass::NonNegative);
  CHECK(nu[0] == 1.0);
  CHECK(nu[3] == doctest::Approx(2.0));
  CHECK(nu.spec() == "pow:alpha=0.5");
  CHECK(WeightSequence::parse("const:3", IndexClass::Negative)[7] == 3.0);
  CHECK(WeightSequence::parse("log", IndexClass::NonNegative)[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(WeightSequence::parse("const:-1", IndexClass::Negative), ConfigError);
  CHECK_THROWS_AS(WeightSequence::parse("pow:alpha=-1", IndexClass::Negative), ConfigError);
  CHECK_THROWS_AS(WeightSequence::parse("table:/nonexistent.json", IndexClass::Negative), ConfigError);
  CHECK_THROWS_AS(WeightSequence::log(IndexClass::Negative)[0], DomainError);

  const auto table = WeightSequence::parse(std::string("table:") + TEST_DATA_DIR + "/linear_table.json",
                                           IndexClass::Negative);
  CHECK(table[1] == 1.0);
  CHECK(table[16] == 16.0);
  CHECK(table[1000] == 16.0);  // last value held
  CHECK(delta2_constant(table) == 2.0);

  const auto bad = WeightSequence::parse(std::string("table:") + TEST_DATA_DIR + "/decreasing_table.json",
                                         IndexClass::Negative);
  CHECK_FALSE(validate_weight(bad, 10).nondecreasing);
}

TEST_CASE("modular examples") {
  const auto one_neg = WeightSequence::constant(1.0, IndexClass::Negative);
  SUBCASE("zero sequence") {
    const CoefficientSequence c{IndexClass::Negative, {0.0, 0.0}};
    CHECK(modular(c, OrliczFunction::exp_minus_one(), one_neg, one_neg, 0.3) == 0.0);
  }
  SUBCASE("single term, Power(2), lambda = 2") {
    const CoefficientSequence c{IndexClass::Negative, {1.0}};
    CHECK(modular(c, OrliczFunction::power(2.0), one_neg, one_neg, 2.0) == 0.25);
  }
  SUBCASE("two terms with phi_n = n + 1") {
    const CoefficientSequence c{IndexClass::Negative, {1.0, 1.0}};
    const auto phi = WeightSequence::power(1.0, IndexClass::Negative);
    CHECK(modular(c, OrliczFunction::power(1.0), phi, one_neg, 1.0) == 5.0);
  }
  SUBCASE("errors") {
    const CoefficientSequence c{IndexClass::Negative, {1.0}};
    CHECK_THROWS_AS(modular(c, OrliczFunction::power(1.0), one_neg, one_neg, 0.0), DomainError);
    CHECK_THROWS_AS(modular(c, OrliczFunction::power(1.0), one_neg, one_neg, -1.0), DomainError);
    const auto one_pos = WeightSequence::constant(1.0, IndexClass::NonNegative);
    CHECK_THROWS_AS(modular(c, OrliczFunction::power(1.0), one_neg, one_pos, 1.0), ConfigError);
    const CoefficientSequence d{IndexClass::NonNegative, {1.0}};
    CHECK_THROWS_AS(modular(d, OrliczFunction::power(1.0), one_neg, one_neg, 1.0), ConfigError);
  }
}

TEST_CASE("modular is nonincreasing in lambda and blows up near 0") {
  std::mt19937_64 rng(3);
  const auto phi = WeightSequence::power(1.0, IndexClass::NonNegative);
  const auto w = WeightSequence::log(IndexClass::NonNegative);
  for (const auto& fn : all_orlicz()) {
    const auto c = random_sequence(rng, IndexClass::NonNegative, 12, 1.0);
    const Modular s(c, fn, phi, w);
    double prev = s(1e-3);
    for (double lambda = 2e-3; lambda < 100.0; lambda *= 1.7) {
      const double cur = s(lambda);
      CHECK(cur <= prev);
      prev = cur;
    }
    CHECK(s(1e-6) > 1e3);
  }
}

TEST_CASE("luxemburg_norm examples") {
  const auto one = WeightSequence::constant(1.0, IndexClass::Negative);
  SUBCASE("zero sequence gives exactly 0") {
    const CoefficientSequence c{IndexClass::Negative, {0.0, 0.0, 0.0}};
    CHECK(luxemburg_norm(c, OrliczFunction::exp_minus_one(), one, one) == 0.0);
    CHECK(luxemburg_norm(CoefficientSequence{IndexClass::Negative, {}}, OrliczFunction::power(2.0), one, one) == 0.0);
  }
  SUBCASE("ExpMinusOne single term solves e^{1/lambda} - 1 = 1") {
    const CoefficientSequence c{IndexClass::Negative, {1.0}};
    CHECK(luxemburg_norm(c, OrliczFunction::exp_minus_one(), one, one) ==
          doctest::Approx(1.0 / std::numbers::ln2).epsilon(1e-12));
  }
  SUBCASE("tolerance range") {
    const CoefficientSequence c{IndexClass::Negative, {1.0}};
    CHECK_THROWS_AS(luxemburg_norm(c, OrliczFunction::power(1.0), one, one, 0.0), DomainError);
    CHECK_THROWS_AS(luxemburg_norm(c, OrliczFunction::power(1.0), one, one, 1e-2), DomainError);
    CHECK(luxemburg_norm(c, OrliczFunction::power(1.0), one, one, 1e-3) == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("luxemburg_norm matches the weighted l^p closed form for Power(p)") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> len(1, 40);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  for (const double p : {1.0, 1.25, 2.0, 2.7, 4.0}) {
    for (const auto cls : {IndexClass::Negative, IndexClass::NonNegative}) {
      for (const auto& phi : all_weights(cls)) {
        for (const auto& w : all_weights(cls)) {
          const auto c = random_sequence(rng, cls, len(rng), std::pow(10.0, log_scale(rng)));
          const double expected = weighted_lp(c, p, phi, w);
          CHECK(luxemburg_norm(c, OrliczFunction::power(p), phi, w) ==
                doctest::Approx(expected).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("luxemburg_norm properties") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const auto cls = IndexClass::Negative;
  for (int trial = 0; trial < 200; ++trial) {
    const auto fns = all_orlicz();
    const auto ws = all_weights(cls);
    const auto& fn = fns[static_cast<std::size_t>(trial) % fns.size()];
    const auto& phi = ws[static_cast<std::size_t>(trial) % ws.size()];
    const auto& w = ws[static_cast<std::size_t>(trial / 7) % ws.size()];
    const auto c = random_sequence(rng, cls, 10, std::pow(10.0, u(rng) / 2));
    const auto d = random_sequence(rng, cls, 10, std::pow(10.0, u(rng) / 2));
    const double nc = luxemburg_norm(c, fn, phi, w);
    const double nd = luxemburg_norm(d, fn, phi, w);

    // Homogeneity under complex scalars.
    const std::complex<double> s(u(rng), u(rng));
    CoefficientSequence sc = c;
    for (auto& v : sc.values) v *= s;
    CHECK(luxemburg_norm(sc, fn, phi, w) == doctest::Approx(std::abs(s) * nc).epsilon(1e-9));

    // Triangle inequality.
    CoefficientSequence sum = c;
    for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += d.values[i];
    CHECK(luxemburg_norm(sum, fn, phi, w) <= (nc + nd) * (1.0 + 1e-9));

    // Monotonicity: shrinking every |c_n| cannot raise the norm.
    CoefficientSequence smaller = c;
    for (auto& v : smaller.values) v *= std::abs(u(rng)) / 3.0;
    CHECK(luxemburg_norm(smaller, fn, phi, w) <= nc * (1.0 + 1e-9));

    // Modular/norm consistency around the returned value.
    const Modular m(c, fn, phi, w);
    CHECK(m(nc * (1.0 + 10 * kDefaultNormTol)) <= 1.0);
    CHECK(m(nc * (1.0 - 10 * kDefaultNormTol)) >= 1.0 - 1e-9);
  }
}
