#include "orlicz_wiener/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orlicz_wiener/algebra.hpp"
#include "orlicz_wiener/error.hpp"
#include "orlicz_wiener/factorization.hpp"
#include "orlicz_wiener/io.hpp"
#include "orlicz_wiener/verify.hpp"

namespace orlicz_wiener::cli {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kFactorTol = 1e-8;
constexpr std::size_t kWeightScan = 10000;

// Thrown for usage problems detected after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LaurentPolynomial load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required for --cmd " + cfg.command);
  const auto first = cfg.input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && cfg.input[first] == '{') return parse_coefficients(cfg.input);
  return read_coefficients(cfg.input);
}

void flatten(const Json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    }
  } else if (!node.is_array()) {
    rows.emplace_back(prefix, node.is_string() ? node.get<std::string>() : node.dump());
  }
}

void emit(const Json& doc, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (cfg.format == "csv") {
    out << "field,value\n";
    for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
  } else {
    for (const auto& [k, v] : rows) out << k << ": " << v << '\n';
  }
}

int emit_error(std::string_view kind, const std::string& message, Json extra, const RunConfig& cfg,
               std::ostream& out, std::ostream& err, int code) {
  if (cfg.format == "json") {
    Json e{{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items()) e[k] = v;
    out << Json{{"error", std::move(e)}}.dump(2) << '\n';
  } else {
    err << "error (" << kind << "): " << message << '\n';
  }
  return code;
}

Json constants_json(const AlgebraSpace& sp) {
  return Json{{"C_phi", sp.c_phi()},       {"C_w", sp.c_w()},
              {"C_psi", sp.c_psi()},       {"C_rho", sp.c_rho()},
              {"C_minus", sp.c_minus()},   {"C_plus", sp.c_plus()},
              {"C", theorem_constant(sp)}};
}

int run_norm(const RunConfig& cfg, std::ostream& out) {
  const LaurentPolynomial f = load_input(cfg);
  const AlgebraSpace sp = AlgebraSpace::parse(cfg.space);
  const NormReport r = wnf_norm(f, sp, cfg.tol.value_or(kNormTol));
  emit(Json{{"command", "norm"},
            {"space", sp.spec()},
            {"norms", to_json(r)},
            {"constants", constants_json(sp)}},
       cfg, out);
  return kOk;
}

int run_weights(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> fields;
  std::stringstream ss(cfg.space);
  for (std::string item; std::getline(ss, item, ';');) fields.push_back(item);
  if (fields.size() != 6) throw ConfigError("--space needs six ';'-separated fields");

  const char* names[] = {"phi", "w", "psi", "rho"};
  Json weights = Json::object();
  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const IndexClass cls = i < 2 ? IndexClass::Negative : IndexClass::NonNegative;
    const WeightSequence nu = WeightSequence::parse(fields[i + 2], cls);
    const WeightReport report = validate_weight(nu, kWeightScan);
    Json entry{{"spec", nu.spec()}, {"class", std::string(to_string(cls))}, {"validation", to_json(report)}};
    if (report.passes()) {
      entry["shift_bound"] = to_json(verify_weight_shift(nu, kWeightScan));
      ok = ok && entry["shift_bound"]["holds"].get<bool>();
    }
    ok = ok && report.passes();
    weights[names[i]] = std::move(entry);
  }
  Json doc{{"command", "weights"}, {"weights", std::move(weights)}, {"passes", ok}};
  if (ok) doc["constants"] = constants_json(AlgebraSpace::parse(cfg.space));
  emit(doc, cfg, out);
  return ok ? kOk : kViolation;
}

Json run_all_suites(const RunConfig& cfg, bool& ok) {
  const double tol = cfg.tol.value_or(kNormTol);
  const std::size_t coeff_trials = std::max<std::size_t>(1, cfg.trials / 2);
  const int coeff_support = cfg.support / 2;

  Json suites = Json::array();
  ok = true;
  for (const auto name : {suite::kTheorem, suite::kOneSidedNegative, suite::kOneSidedNonNegative}) {
    const SuiteReport r = run_suite(name, cfg.seed, cfg.trials, cfg.support, tol);
    ok = ok && r.holds();
    suites.push_back(to_json(r));
  }
  const SuiteReport coeff = run_suite(suite::kCoefficient, cfg.seed, coeff_trials, coeff_support, tol);
  ok = ok && coeff.holds();
  suites.push_back(to_json(coeff));

  Json shift = Json::array();
  for (const ShiftScanEntry& e : run_weight_shift_scan(kWeightScan)) {
    ok = ok && e.report.holds();
    Json j = to_json(e.report);
    j["weight"] = e.weight;
    j["class"] = std::string(to_string(e.index_class));
    shift.push_back(std::move(j));
  }
  return Json{{"suites", std::move(suites)}, {"weight_shift", std::move(shift)}};
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.replay.empty()) {
    const TrialOutcome o = replay(cfg.replay, cfg.tol.value_or(kNormTol));
    emit(Json{{"command", "verify"}, {"replay", cfg.replay}, {"violations", o.violations},
              {"witness", to_json(o.witness)}},
         cfg, out);
    return o.violations == 0 ? kOk : kViolation;
  }
  bool ok = true;
  Json doc{{"command", "verify"}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"support", cfg.support}};
  Json suites = run_all_suites(cfg, ok);
  for (auto& [k, v] : suites.items()) doc[k] = std::move(v);
  doc["passes"] = ok;
  emit(doc, cfg, out);
  return ok ? kOk : kViolation;
}

int run_factorize(const RunConfig& cfg, std::ostream& out) {
  const LaurentPolynomial b = load_input(cfg);
  const AlgebraSpace sp = AlgebraSpace::parse(cfg.space);
  FactorizationOptions opts;
  opts.grid = cfg.grid;
  opts.truncation = cfg.trunc;
  opts.tol = cfg.tol.value_or(kFactorTol);
  const FactorizationResult res = factorize(b, opts);
  Json doc = to_json(res);
  doc["command"] = "factorize";
  doc["space"] = sp.spec();
  doc["membership"] = to_json(membership(res, sp));
  emit(doc, cfg, out);
  return kOk;
}

// Verification suites plus a small factorization battery.
int run_selftest(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  Json doc{{"command", "selftest"}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"support", cfg.support}};
  Json suites = run_all_suites(cfg, ok);
  for (auto& s : suites["suites"]) s.erase("witnesses");
  for (auto& [k, v] : suites.items()) doc[k] = std::move(v);

  Json fac = Json::array();
  {
    const LaurentPolynomial b{{0, 2.0}, {1, 1.0}};
    const FactorizationResult r = factorize(b, {});
    const bool pass = std::abs(r.g - Complex{2.0, 0.0}) <= 1e-10 && r.residual <= 1e-12 &&
                      std::abs(r.b_plus[1] - Complex{0.5, 0.0}) <= 1e-10;
    ok = ok && pass;
    fac.push_back(Json{{"case", "2+t"}, {"residual", r.residual}, {"passes", pass}});
  }
  for (int n = -3; n <= 3; ++n) {
    if (n == 0) continue;
    LaurentPolynomial b;
    b.set(n, 2.0);
    b.set(n + 1, 1.0);
    int kappa = 0;
    try {
      factorize(b, {});
    } catch (const IndexObstructionError& e) {
      kappa = e.kappa();
    }
    const bool pass = kappa == n;
    ok = ok && pass;
    fac.push_back(Json{{"case", "t^" + std::to_string(n) + "(2+t)"}, {"kappa", kappa}, {"passes", pass}});
  }
  doc["factorization"] = std::move(fac);
  doc["passes"] = ok;
  emit(doc, cfg, out);
  return ok ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  double tol = 0.0;
  CLI::App app{"Norms, inequality checks and Wiener-Hopf factorization in W ∩ Fl^{Phi,Psi}", "orlicz-wiener"};
  app.add_option("--cmd", cfg.command, "norm | weights | verify | factorize | selftest")
      ->required()
      ->check(CLI::IsMember({"norm", "weights", "verify", "factorize", "selftest"}));
  app.add_option("--input", cfg.input, "coefficient JSON file, or inline JSON");
  app.add_option("--space", cfg.space, "\"Phi;Psi;phi;w;psi;rho\"")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol, "norm tolerance (1e-12) or factorization residual tolerance (1e-8)");
  app.add_option("--trials", cfg.trials, "random trials per suite")->capture_default_str();
  app.add_option("--seed", cfg.seed, "suite seed")->capture_default_str();
  app.add_option("--support", cfg.support, "support bound of random elements")->capture_default_str();
  app.add_option("--grid", cfg.grid, "factorization grid size (power of two)")->capture_default_str();
  app.add_option("--trunc", cfg.trunc, "factorization truncation M")->capture_default_str();
  app.add_option("--format", cfg.format, "json | csv | human")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--replay", cfg.replay, "rerun one trial: <suite>/<seed>/<trial>/<support>");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  if (tol_opt->count() > 0) cfg.tol = tol;

  try {
    if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("--tol must be positive");
    if (cfg.trials == 0) throw UsageError("--trials must be at least 1");
    if (cfg.support < 0) throw UsageError("--support must be nonnegative");
    if (cfg.command == "norm") return run_norm(cfg, out);
    if (cfg.command == "weights") return run_weights(cfg, out);
    if (cfg.command == "verify") return run_verify(cfg, out);
    if (cfg.command == "factorize") return run_factorize(cfg, out);
    return run_selftest(cfg, out);
  } catch (const UsageError& e) {
    return emit_error("usage", e.what(), Json::object(), cfg, out, err, kUsage);
  } catch (const IndexObstructionError& e) {
    return emit_error(e.kind(), e.what(), Json{{"kappa", e.kappa()}}, cfg, out, err, kObstruction);
  } catch (const TruncationError& e) {
    return emit_error(e.kind(), e.what(), Json{{"residual", e.residual()}}, cfg, out, err, kObstruction);
  } catch (const VanishingSymbolError& e) {
    return emit_error(e.kind(), e.what(), Json::object(), cfg, out, err, kObstruction);
  } catch (const UnderResolvedError& e) {
    return emit_error(e.kind(), e.what(), Json::object(), cfg, out, err, kObstruction);
  } catch (const Error& e) {
    return emit_error(e.kind(), e.what(), Json::object(), cfg, out, err, kUsage);
  }
}

}  // namespace orlicz_wiener::cli
