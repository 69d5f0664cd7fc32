#include "orlicz_wiener/orlicz.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <system_error>

#include <json.hpp>

#include "orlicz_wiener/error.hpp"

namespace orlicz_wiener {

namespace {

double parse_real(std::string_view text, std::string_view context) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError("malformed number '" + std::string(text) + "' in " +
                      std::string(context));
  }
  return value;
}

// Accepts "<head>:<key>=<number>" and returns the number.
double parse_keyed(std::string_view spec, std::string_view prefix) {
  return parse_real(spec.substr(prefix.size()), spec);
}

// sup_{n >= 1} ln(e+2n)/ln(e+n). The ratio peaks at n = 4 and decreases
// monotonically to 1 afterwards, so a short scan finds the supremum.
double log_weight_delta2() {
  double sup = 1.0;
  for (std::size_t n = 1; n <= 4096; ++n) {
    const double x = static_cast<double>(n);
    sup = std::max(sup, std::log(std::numbers::e + 2.0 * x) / std::log(std::numbers::e + x));
  }
  return sup;
}

}  // namespace

std::string_view to_string(IndexClass cls) noexcept {
  return cls == IndexClass::Negative ? "negative" : "nonnegative";
}

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// OrliczFunction

OrliczFunction OrliczFunction::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw ConfigError("pow: exponent must satisfy p >= 1, got " + format_number(p));
  }
  return {Family::Power, p};
}

OrliczFunction OrliczFunction::exp_minus_one() { return {Family::ExpMinusOne, 1.0}; }

OrliczFunction OrliczFunction::power_log(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw ConfigError("powlog: exponent must satisfy p >= 1, got " + format_number(p));
  }
  return {Family::PowerLog, p};
}

OrliczFunction OrliczFunction::parse(std::string_view spec) {
  if (spec == "expm1") return exp_minus_one();
  if (spec.starts_with("pow:p=")) return power(parse_keyed(spec, "pow:p="));
  if (spec.starts_with("powlog:p=")) return power_log(parse_keyed(spec, "powlog:p="));
  throw ConfigError("unknown Orlicz function spec '" + std::string(spec) + "'");
}

double OrliczFunction::operator()(double x) const {
  if (!(x >= 0.0)) throw DomainError("Orlicz function evaluated at negative or NaN argument");
  if (x == 0.0) return 0.0;
  switch (family_) {
    case Family::Power:
      if (p_ == 1.0) return x;
      if (p_ == 2.0) return x * x;
      return std::pow(x, p_);
    case Family::ExpMinusOne:
      return std::expm1(x);
    case Family::PowerLog:
      return (p_ == 1.0 ? x : std::pow(x, p_)) * std::log1p(x);
  }
  return 0.0;
}

std::string OrliczFunction::spec() const {
  switch (family_) {
    case Family::Power: return "pow:p=" + format_number(p_);
    case Family::ExpMinusOne: return "expm1";
    case Family::PowerLog: return "powlog:p=" + format_number(p_);
  }
  return {};
}

// ---------------------------------------------------------------------------
// WeightSequence

WeightSequence WeightSequence::power(double alpha, IndexClass cls) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ConfigError("pow weight: alpha must be >= 0, got " + format_number(alpha));
  }
  return {Family::Power, alpha, cls, std::exp2(alpha)};
}

WeightSequence WeightSequence::log(IndexClass cls) {
  static const double delta2 = log_weight_delta2();
  return {Family::Log, 0.0, cls, delta2};
}

WeightSequence WeightSequence::constant(double c, IndexClass cls) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ConfigError("const weight must be positive, got " + format_number(c));
  }
  return {Family::Const, c, cls, 1.0};
}

WeightSequence WeightSequence::table(std::vector<double> values, double declared_delta2,
                                     IndexClass cls, std::string source) {
  if (values.empty()) throw ConfigError("weight table is empty");
  if (!(declared_delta2 > 0.0) || !std::isfinite(declared_delta2)) {
    throw ConfigError("weight table: delta2 constant must be positive and finite");
  }
  WeightSequence nu{Family::Explicit, 0.0, cls, declared_delta2};
  nu.table_ = std::move(values);
  nu.source_ = std::move(source);
  return nu;
}

WeightSequence WeightSequence::load_table(const std::filesystem::path& path, IndexClass cls) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open weight table '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("weight table '" + path.string() + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc.contains("delta2")) {
    throw ConfigError("weight table must be an object with 'values' and 'delta2'");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "values" && key != "delta2") {
      throw ConfigError("weight table: unknown key '" + key + "'");
    }
  }
  try {
    return table(doc.at("values").get<std::vector<double>>(), doc.at("delta2").get<double>(),
                 cls, path.string());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("weight table '" + path.string() + "': " + e.what());
  }
}

WeightSequence WeightSequence::parse(std::string_view spec, IndexClass cls) {
  if (spec == "log") return log(cls);
  if (spec.starts_with("pow:alpha=")) return power(parse_keyed(spec, "pow:alpha="), cls);
  if (spec.starts_with("const:")) return constant(parse_keyed(spec, "const:"), cls);
  if (spec.starts_with("table:") && spec.size() > 6) {
    return load_table(std::filesystem::path(std::string(spec.substr(6))), cls);
  }
  throw ConfigError("unknown weight spec '" + std::string(spec) + "'");
}

double WeightSequence::operator[](std::size_t n) const {
  if (n < first()) {
    throw DomainError("weight index " + std::to_string(n) + " outside the " +
                      std::string(to_string(cls_)) + " index set");
  }
  const double x = static_cast<double>(n);
  switch (family_) {
    case Family::Power:
      if (param_ == 0.0) return 1.0;
      if (param_ == 1.0) return x + 1.0;
      return std::pow(x + 1.0, param_);
    case Family::Log:
      return std::log(std::numbers::e + x);
    case Family::Const:
      return param_;
    case Family::Explicit: {
      const std::size_t i = std::min(n - first(), table_.size() - 1);
      return table_[i];
    }
  }
  return 0.0;
}

std::string WeightSequence::spec() const {
  switch (family_) {
    case Family::Power: return "pow:alpha=" + format_number(param_);
    case Family::Log: return "log";
    case Family::Const: return "const:" + format_number(param_);
    case Family::Explicit: return "table:" + source_;
  }
  return {};
}

WeightReport validate_weight(const WeightSequence& nu, std::size_t n_max) {
  if (n_max < 2) throw DomainError("validate_weight requires n_max >= 2");

  constexpr std::size_t kMaxMessages = 8;
  WeightReport report;
  report.n_max = n_max;
  report.declared = nu.declared_delta2();
  auto note = [&](std::string msg) {
    if (report.violations.size() < kMaxMessages) report.violations.push_back(std::move(msg));
  };

  for (std::size_t n = nu.first(); n <= n_max; ++n) {
    const double v = nu[n];
    if (!(v > 0.0) || !std::isfinite(v)) {
      report.positive = false;
      note("(i) nu_" + std::to_string(n) + " = " + format_number(v) + " is not positive");
    }
    if (n < n_max && v > nu[n + 1]) {
      report.nondecreasing = false;
      note("(ii) nu_" + std::to_string(n) + " > nu_" + std::to_string(n + 1));
    }
  }

  const double bound = report.declared * (1.0 + 1e-12);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double base = nu[n];
    if (!(base > 0.0)) continue;
    const double ratio = nu[2 * n] / base;
    report.empirical_sup = std::max(report.empirical_sup, ratio);
    if (ratio > bound) {
      report.delta2 = false;
      note("(iii) nu_" + std::to_string(2 * n) + "/nu_" + std::to_string(n) + " = " +
           format_number(ratio) + " exceeds C = " + format_number(report.declared));
    }
  }
  return report;
}

double delta2_constant(const WeightSequence& nu) {
  if (nu.family() != WeightSequence::Family::Explicit) return nu.declared_delta2();

  // Past the table the sequence is constant, so every ratio nu_{2n}/nu_n with
  // n beyond the last tabulated index equals 1 and the scan below is exhaustive.
  const std::size_t n_max = nu.first() + nu.table_size();
  const WeightReport report = validate_weight(nu, std::max<std::size_t>(2, 2 * n_max + 2));
  if (!report.passes()) {
    throw InvalidWeightError("weight " + nu.spec() + " fails validation: " +
                             (report.violations.empty() ? std::string("unknown")
                                                        : report.violations.front()));
  }
  return report.declared;
}

// ---------------------------------------------------------------------------
// Modular and Luxemburg norm

bool CoefficientSequence::is_zero() const noexcept {
  return std::all_of(values.begin(), values.end(),
                     [](std::complex<double> v) { return v == std::complex<double>{}; });
}

Modular::Modular(const CoefficientSequence& c, const OrliczFunction& phi_fn,
                 const WeightSequence& phi, const WeightSequence& w)
    : phi_fn_(phi_fn) {
  if (phi.index_class() != w.index_class()) {
    throw ConfigError("weights phi and w belong to different index classes");
  }
  if (c.index_class != phi.index_class()) {
    throw ConfigError("coefficient sequence and weights belong to different index classes");
  }
  args_.reserve(c.values.size());
  weights_.reserve(c.values.size());
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const double a = std::abs(c.values[i]);
    if (a == 0.0) continue;
    const std::size_t n = c.first() + i;
    args_.push_back(a * phi[n]);
    weights_.push_back(w[n]);
    scale_ = std::max(scale_, args_.back());
  }
}

double Modular::operator()(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("modular requires lambda > 0");
  double sum = 0.0;
  for (std::size_t i = 0; i < args_.size(); ++i) sum += phi_fn_(args_[i] / lambda) * weights_[i];
  return sum;
}

double modular(const CoefficientSequence& c, const OrliczFunction& phi_fn,
               const WeightSequence& phi, const WeightSequence& w, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("modular requires lambda > 0");
  return Modular(c, phi_fn, phi, w)(lambda);
}

double luxemburg_norm(const CoefficientSequence& c, const OrliczFunction& phi_fn,
                      const WeightSequence& phi, const WeightSequence& w, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) throw DomainError("luxemburg_norm: tol must lie in (0, 1e-3]");
  const Modular s(c, phi_fn, phi, w);
  if (s.is_zero()) return 0.0;

  // Bracket lo < lambda* <= hi with S(lo) > 1 >= S(hi). The doubling/halving
  // count is bounded by the exponent range of double.
  constexpr int kMaxBracketSteps = 2200;
  double lo = s.scale();
  double hi = s.scale();
  if (s(hi) <= 1.0) {
    for (int i = 0; i < kMaxBracketSteps; ++i) {
      lo = hi * 0.5;
      if (s(lo) > 1.0) break;
      hi = lo;
    }
  } else {
    for (int i = 0; i < kMaxBracketSteps; ++i) {
      lo = hi;
      hi *= 2.0;
      if (s(hi) <= 1.0) break;
    }
  }

  for (int i = 0; i < kMaxBisectionSteps && hi - lo > tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (s(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace orlicz_wiener
