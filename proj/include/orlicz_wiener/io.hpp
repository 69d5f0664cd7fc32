#pragma once

// JSON (de)serialization of coefficients and reports.
//
// Coefficient format: {"coeffs": [{"k": <int>, "re": <float>, "im": <float>}, ...]}.
// Unknown keys and duplicate indices are rejected; "re"/"im" default to 0.

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "orlicz_wiener/algebra.hpp"
#include "orlicz_wiener/factorization.hpp"
#include "orlicz_wiener/verify.hpp"

namespace orlicz_wiener {

using Json = nlohmann::ordered_json;

/// Throws ConfigError on malformed input.
LaurentPolynomial coefficients_from_json(const Json& doc);
LaurentPolynomial parse_coefficients(std::string_view text);
LaurentPolynomial read_coefficients(const std::filesystem::path& path);

/// Nonzero coefficients in ascending k.
Json to_json(const LaurentPolynomial& f);
Json to_json(const NormReport& r);
Json to_json(const Fingerprint& fp);
Json to_json(const InequalityWitness& w);
Json to_json(const WeightReport& r);
Json to_json(const ShiftReport& r);
Json to_json(const SuiteReport& r, bool with_witnesses = true);
Json to_json(const FactorizationResult& r);
Json to_json(const MembershipReport& r);

}  // namespace orlicz_wiener
