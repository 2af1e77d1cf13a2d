#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperseries/series.hpp"

namespace hyperseries {

// Canonical text form: one term per line, in Series order,
//   p/q * t^a z^b u2^c2 ... uM^cM
// listing every variable of the context's alphabet. The zero series is the
// empty string.
std::string to_text(const Series& s);
Series series_from_text(std::string_view text, const TruncationContext& ctx);

// JSON form: [{"exps": [t, z, u2, ..., uM], "num": "p", "den": "q"}, ...].
// Numerator and denominator are decimal strings.
nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j, const TruncationContext& ctx);

// Human-readable monomial, e.g. "t^2 u2 u3^2"; "1" for the unit.
std::string monomial_to_string(const Monomial& m);

}  // namespace hyperseries
