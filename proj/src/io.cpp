#include "orlicz_wiener/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "orlicz_wiener/error.hpp"

namespace orlicz_wiener {

namespace {

double number_field(const Json& entry, const char* key) {
  if (!entry.contains(key)) return 0.0;
  const Json& v = entry.at(key);
  if (!v.is_number()) throw ConfigError(std::string("coefficient field '") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(std::string("coefficient field '") + key + "' is not finite");
  return x;
}

// JSON has no infinity; ratios of violated 0-rhs witnesses serialize as null.
Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

LaurentPolynomial coefficients_from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("coefficient document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "coeffs") throw ConfigError("unknown key '" + key + "' in coefficient document");
  }
  if (!doc.contains("coeffs") || !doc.at("coeffs").is_array()) {
    throw ConfigError("coefficient document needs a 'coeffs' array");
  }
  LaurentPolynomial f;
  std::set<long long> seen;
  for (const Json& entry : doc.at("coeffs")) {
    if (!entry.is_object()) throw ConfigError("each coefficient must be an object");
    for (const auto& [key, _] : entry.items()) {
      if (key != "k" && key != "re" && key != "im") {
        throw ConfigError("unknown key '" + key + "' in coefficient entry");
      }
    }
    if (!entry.contains("k") || !entry.at("k").is_number_integer()) {
      throw ConfigError("coefficient entry needs an integer 'k'");
    }
    const long long k = entry.at("k").get<long long>();
    if (k < -(1LL << 20) || k > (1LL << 20)) throw ConfigError("coefficient index out of range");
    if (!seen.insert(k).second) throw ConfigError("duplicate coefficient index k = " + std::to_string(k));
    f.set(static_cast<int>(k), {number_field(entry, "re"), number_field(entry, "im")});
  }
  return f;
}

LaurentPolynomial parse_coefficients(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed coefficient JSON: ") + e.what());
  }
  return coefficients_from_json(doc);
}

LaurentPolynomial read_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open coefficient file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coefficients(buf.str());
}

Json to_json(const LaurentPolynomial& f) {
  Json coeffs = Json::array();
  for (int k = -f.bound(); k <= f.bound(); ++k) {
    if (f[k] == Complex{}) continue;
    coeffs.push_back(Json{{"k", k}, {"re", f[k].real()}, {"im", f[k].imag()}});
  }
  return Json{{"coeffs", std::move(coeffs)}};
}

Json to_json(const NormReport& r) {
  return Json{{"wiener", r.wiener}, {"minus", r.minus}, {"plus", r.plus}, {"total", r.total}};
}

Json to_json(const Fingerprint& fp) {
  Json j{{"replay", fp.replay_key()},
         {"suite", fp.suite},
         {"seed", fp.seed},
         {"trial", fp.trial},
         {"support_bound", fp.support_bound},
         {"support_f", fp.support_f},
         {"support_g", fp.support_g},
         {"space", fp.space}};
  if (fp.k) j["k"] = *fp.k;
  if (fp.side) j["side"] = std::string(to_string(*fp.side));
  return j;
}

Json to_json(const InequalityWitness& w) {
  return Json{{"lhs", w.lhs},
              {"rhs", w.rhs},
              {"constant", w.constant},
              {"ratio", finite_or_null(w.ratio())},
              {"holds", w.holds},
              {"fingerprint", to_json(w.fingerprint)}};
}

Json to_json(const WeightReport& r) {
  return Json{{"n_max", r.n_max},
              {"positive", r.positive},
              {"nondecreasing", r.nondecreasing},
              {"delta2", r.delta2},
              {"empirical_sup", r.empirical_sup},
              {"declared", r.declared},
              {"passes", r.passes()},
              {"violations", r.violations}};
}

Json to_json(const ShiftReport& r) {
  Json j{{"checked", r.checked},
         {"violations", r.violations},
         {"max_ratio", r.max_ratio},
         {"holds", r.holds()}};
  if (r.first_violation) {
    j["first_violation"] = Json{{"k", r.first_violation->first}, {"j", r.first_violation->second}};
  }
  return j;
}

Json to_json(const SuiteReport& r, bool with_witnesses) {
  Json ratios = Json::object();
  for (const auto& [family, ratio] : r.max_ratios) ratios[family] = finite_or_null(ratio);
  Json failures = Json::array();
  for (const Fingerprint& fp : r.failures) failures.push_back(to_json(fp));
  Json j{{"suite", r.name},
         {"seed", r.seed},
         {"trials", r.trials},
         {"support_bound", r.support_bound},
         {"violations", r.violations},
         {"max_ratios", std::move(ratios)},
         {"failures", std::move(failures)}};
  if (with_witnesses) {
    Json ws = Json::array();
    for (const InequalityWitness& w : r.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
  }
  return j;
}

Json to_json(const FactorizationResult& r) {
  return Json{{"kappa", r.kappa},
              {"G", complex_json(r.g)},
              {"b_minus", to_json(r.b_minus)},
              {"b_plus", to_json(r.b_plus)},
              {"log_b", to_json(r.log_coeffs)},
              {"residual", r.residual},
              {"one_sidedness", r.one_sidedness},
              {"grid", r.grid},
              {"truncation", r.truncation},
              {"winding",
               Json{{"min_modulus", r.winding.min_modulus},
                    {"turns", r.winding.turns},
                    {"rounding_defect", r.winding.rounding_defect}}}};
}

Json to_json(const MembershipReport& r) {
  return Json{{"b_plus", to_json(r.b_plus)},
              {"b_plus_inv", to_json(r.b_plus_inv)},
              {"b_minus", to_json(r.b_minus)},
              {"b_minus_inv", to_json(r.b_minus_inv)},
              {"all_finite", r.all_finite()}};
}

}  // namespace orlicz_wiener
