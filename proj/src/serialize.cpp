#include "metacover/serialize.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "metacover/error.hpp"

namespace metacover {

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const GL2& g) {
  Json arr = Json::array();
  for (const auto& e : g.entries()) arr.push_back(to_json(e));
  return arr;
}

Json to_json(const Mu& m) { return m.exp(); }

Json to_json(const MetaElement& h) {
  Json j = Json::object();
  j["g"] = to_json(h.g);
  j["eps"] = to_json(h.eps);
  return j;
}

Json to_json(const WitnessReport& r) {
  Json j = Json::object();
  j["case"] = to_string(r.tag);
  j["z"] = to_json(r.z);
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["verified"] = r.verified;
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

GL2 gl2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw Error(ErrorCode::ParseError, "expected a 4-entry matrix, got " + j.dump());
  }
  return GL2(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
             rational_from_json(j[3]));
}

Mu mu_from_json(const Json& j, const PadicContext& ctx) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, "expected an exponent, got " + j.dump());
  return Mu(j.get<std::int64_t>(), ctx.n());
}

MetaElement meta_from_json(const Json& j, const PadicContext& ctx) {
  if (!j.is_object() || !j.contains("g") || !j.contains("eps")) {
    throw Error(ErrorCode::ParseError, "expected {\"g\":...,\"eps\":...}, got " + j.dump());
  }
  return MetaElement{gl2_from_json(j.at("g")), mu_from_json(j.at("eps"), ctx)};
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

GL2 parse_gl2(std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 2) {
    throw Error(ErrorCode::ParseError, "matrix must look like a,b;c,d: '" + std::string(text) + "'");
  }
  auto top = split(rows[0], ',');
  auto bottom = split(rows[1], ',');
  if (top.size() != 2 || bottom.size() != 2) {
    throw Error(ErrorCode::ParseError, "matrix must look like a,b;c,d: '" + std::string(text) + "'");
  }
  return GL2(parse_rational(top[0]), parse_rational(top[1]), parse_rational(bottom[0]),
             parse_rational(bottom[1]));
}

MetaElement parse_meta(std::string_view text, const PadicContext& ctx) {
  auto at = text.find('@');
  std::int64_t e = 0;
  if (at != std::string_view::npos) {
    auto tail = text.substr(at + 1);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), e);
    if (ec != std::errc() || ptr != tail.data() + tail.size()) {
      throw Error(ErrorCode::ParseError, "bad mu_n exponent in '" + std::string(text) + "'");
    }
  }
  return MetaElement{parse_gl2(text.substr(0, at)), Mu(e, ctx.n())};
}

std::string format_gl2(const GL2& g) {
  auto r = [](const Rational& q) { return q.get_str(); };
  return r(g.a()) + "," + r(g.b()) + ";" + r(g.c()) + "," + r(g.d());
}

std::string format_meta(const MetaElement& h) {
  return format_gl2(h.g) + "@" + std::to_string(h.eps.exp());
}

}  // namespace metacover
