#include "orlicz_wiener/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "orlicz_wiener/error.hpp"

namespace orlicz_wiener {

namespace {

constexpr std::array<double, 4> kExponents{1.0, 1.5, 2.0, 3.0};
constexpr std::array<double, 4> kAlphas{0.0, 0.5, 1.0, 2.0};
constexpr std::array<double, 2> kConstants{1.0, 2.5};

std::uint32_t fnv1a(std::string_view text) {
  std::uint32_t h = 2166136261u;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 16777619u;
  }
  return h;
}

std::mt19937_64 trial_rng(std::string_view suite_name, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    fnv1a(suite_name)};
  return std::mt19937_64(seq);
}

OrliczFunction pick_orlicz(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * kExponents.size());
  const std::size_t i = pick(rng);
  if (i == 2 * kExponents.size()) return OrliczFunction::exp_minus_one();
  if (i < kExponents.size()) return OrliczFunction::power(kExponents[i]);
  return OrliczFunction::power_log(kExponents[i - kExponents.size()]);
}

std::vector<WeightSequence> builtin_weights(IndexClass cls) {
  std::vector<WeightSequence> out;
  for (const double a : kAlphas) out.push_back(WeightSequence::power(a, cls));
  out.push_back(WeightSequence::log(cls));
  for (const double c : kConstants) out.push_back(WeightSequence::constant(c, cls));
  return out;
}

WeightSequence pick_weight(std::mt19937_64& rng, IndexClass cls) {
  auto all = builtin_weights(cls);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

LaurentPolynomial random_shaped(std::mt19937_64& rng, int support_bound, int& support) {
  std::uniform_int_distribution<int> pick_support(0, support_bound);
  std::uniform_real_distribution<double> exponent(-2.0, 2.0);
  std::uniform_int_distribution<int> pick_shape(0, 3);
  support = pick_support(rng);
  const double scale = std::pow(10.0, exponent(rng));
  const int shape = pick_shape(rng);
  LaurentPolynomial f = random_element(support, rng(), scale);
  std::bernoulli_distribution coin(0.5);
  for (int k = -support; k <= support; ++k) {
    const bool drop = (shape == 1 && k < 0) || (shape == 2 && k >= 0) || (shape == 3 && coin(rng));
    if (drop) f.set(k, {});
  }
  return f;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

bool worse(const InequalityWitness& a, const InequalityWitness& b) {
  if (a.holds != b.holds) return !a.holds;
  return a.ratio() > b.ratio();
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("replay key: malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

AlgebraSpace random_space(std::mt19937_64& rng) {
  OrliczFunction phi_fn = pick_orlicz(rng);
  OrliczFunction psi_fn = pick_orlicz(rng);
  WeightSequence phi = pick_weight(rng, IndexClass::Negative);
  WeightSequence w = pick_weight(rng, IndexClass::Negative);
  WeightSequence psi = pick_weight(rng, IndexClass::NonNegative);
  WeightSequence rho = pick_weight(rng, IndexClass::NonNegative);
  return AlgebraSpace(phi_fn, psi_fn, std::move(phi), std::move(w), std::move(psi), std::move(rho));
}

Trial make_trial(std::string_view suite_name, std::uint64_t seed, std::uint64_t trial,
                 int support_bound) {
  if (support_bound < 0) throw ConfigError("support bound must be nonnegative");
  auto rng = trial_rng(suite_name, seed, trial);
  AlgebraSpace space = random_space(rng);
  int sf = 0, sg = 0;
  LaurentPolynomial f = random_shaped(rng, support_bound, sf);
  LaurentPolynomial g = random_shaped(rng, support_bound, sg);

  Fingerprint fp;
  fp.suite = std::string(suite_name);
  fp.seed = seed;
  fp.trial = trial;
  fp.support_bound = support_bound;
  fp.support_f = sf;
  fp.support_g = sg;
  fp.space = space.spec();
  return Trial{std::move(f), std::move(g), std::move(space), std::move(fp)};
}

TrialOutcome run_trial(std::string_view suite_name, std::uint64_t seed, std::uint64_t trial,
                       int support_bound, double tol) {
  const Trial t = make_trial(suite_name, seed, trial, support_bound);
  TrialOutcome out;

  if (suite_name == suite::kTheorem) {
    const TheoremAssembly a = assemble_theorem(t.f, t.g, t.space, tol);
    out.witness = a.theorem;
    out.violations = a.holds() ? 0 : 1;
    out.ratios = {{std::string(suite::kTheorem), a.theorem.ratio()},
                  {"wiener", a.wiener.ratio()},
                  {std::string(suite::kOneSidedNegative), a.minus.ratio()},
                  {std::string(suite::kOneSidedNonNegative), a.plus.ratio()}};
  } else if (suite_name == suite::kOneSidedNegative || suite_name == suite::kOneSidedNonNegative) {
    const Side side = suite_name == suite::kOneSidedNegative ? Side::Negative : Side::NonNegative;
    out.witness = verify_one_sided(t.f, t.g, t.space, side, tol);
    out.violations = out.witness.holds ? 0 : 1;
    out.ratios = {{std::string(suite_name), out.witness.ratio()}};
  } else if (suite_name == suite::kCoefficient) {
    const int top = t.f.bound() + t.g.bound() + 1;
    bool first = true;
    for (const Side side : {Side::Negative, Side::NonNegative}) {
      for (int k = side == Side::Negative ? 1 : 0; k <= top; ++k) {
        const InequalityWitness w = verify_coefficient_bound(t.f, t.g, k, side);
        if (!w.holds) ++out.violations;
        if (first || worse(w, out.witness)) out.witness = w;
        first = false;
      }
    }
    out.ratios = {{std::string(suite::kCoefficient), out.witness.ratio()}};
  } else {
    throw ConfigError("unknown suite '" + std::string(suite_name) + "'");
  }

  // Keep the coefficient index/side recorded by verify_coefficient_bound.
  const auto k = out.witness.fingerprint.k;
  const auto side = out.witness.fingerprint.side;
  out.witness.fingerprint = t.fingerprint;
  out.witness.fingerprint.k = k;
  out.witness.fingerprint.side = side;
  return out;
}

TrialOutcome replay(std::string_view key, double tol) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = key.find('/', start)) != std::string_view::npos; start = pos + 1) {
    parts.push_back(key.substr(start, pos - start));
  }
  parts.push_back(key.substr(start));
  if (parts.size() != 4) {
    throw ConfigError("replay key must look like <suite>/<seed>/<trial>/<support>");
  }
  const std::uint64_t support = parse_u64(parts[3], "support");
  if (support > 1u << 20) throw ConfigError("replay key: support bound too large");
  return run_trial(parts[0], parse_u64(parts[1], "seed"), parse_u64(parts[2], "trial"),
                   static_cast<int>(support), tol);
}

double SuiteReport::max_ratio() const noexcept {
  return max_ratios.empty() ? 0.0 : max_ratios.front().second;
}

SuiteReport run_suite(std::string_view suite_name, std::uint64_t seed, std::size_t trials,
                      int support_bound, double tol, unsigned threads) {
  if (trials == 0) throw ConfigError("a suite needs at least one trial");
  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, worker_count(threads), [&](std::size_t i) {
    outcomes[i] = run_trial(suite_name, seed, i, support_bound, tol);
  });

  SuiteReport report;
  report.name = std::string(suite_name);
  report.seed = seed;
  report.trials = trials;
  report.support_bound = support_bound;
  for (const TrialOutcome& o : outcomes) {
    report.violations += o.violations;
    if (o.violations > 0) report.failures.push_back(o.witness.fingerprint);
    report.witnesses.push_back(o.witness);
    for (const auto& [family, ratio] : o.ratios) {
      auto it = std::find_if(report.max_ratios.begin(), report.max_ratios.end(),
                             [&](const auto& e) { return e.first == family; });
      if (it == report.max_ratios.end()) {
        report.max_ratios.emplace_back(family, ratio);
      } else {
        it->second = std::max(it->second, ratio);
      }
    }
  }
  return report;
}

std::vector<ShiftScanEntry> run_weight_shift_scan(std::size_t k_max, unsigned threads) {
  std::vector<WeightSequence> weights = builtin_weights(IndexClass::Negative);
  for (auto& nu : builtin_weights(IndexClass::NonNegative)) weights.push_back(std::move(nu));

  std::vector<ShiftScanEntry> entries(weights.size());
  parallel_for(weights.size(), worker_count(threads), [&](std::size_t i) {
    entries[i] = ShiftScanEntry{weights[i].spec(), weights[i].index_class(),
                                verify_weight_shift(weights[i], k_max)};
  });
  return entries;
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORLICZ_WIENER_THREADS")) {
    unsigned cap = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc{} && ptr == text.data() + text.size() && cap > 0) n = std::min(n, cap);
  }
  return n;
}

}  // namespace orlicz_wiener
