#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "metacover/conjugacy_witness.hpp"

namespace metacover {

using Json = nlohmann::ordered_json;

// JSON forms: Rational "num/den"; GL2 row-major array of four rationals;
// Mu its exponent; MetaElement {"g": [...], "eps": e}.
Json to_json(const Rational& q);
Json to_json(const GL2& g);
Json to_json(const Mu& m);
Json to_json(const MetaElement& h);
Json to_json(const WitnessReport& r);

Rational rational_from_json(const Json& j);
GL2 gl2_from_json(const Json& j);
Mu mu_from_json(const Json& j, const PadicContext& ctx);
MetaElement meta_from_json(const Json& j, const PadicContext& ctx);

// Command-line forms: GL2 "a,b;c,d"; MetaElement "a,b;c,d" or "a,b;c,d@e".
GL2 parse_gl2(std::string_view text);
MetaElement parse_meta(std::string_view text, const PadicContext& ctx);
std::string format_gl2(const GL2& g);
std::string format_meta(const MetaElement& h);

}  // namespace metacover
