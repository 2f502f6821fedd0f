#pragma once

// Shared helpers for the JSON document formats. Internal to the library.

#include <string>

#include <json.hpp>

#include "qrmult/error.hpp"
#include "qrmult/lattice.hpp"
#include "qrmult/polynomial.hpp"

namespace qrmult::detail {

using Json = nlohmann::json;

[[noreturn]] inline void fail(const std::string& code, const std::string& location, const std::string& message) {
  throw Error(code, location + ": " + message);
}

inline Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("parse", std::string("document: ") + e.what());
  }
}

inline void require_keys(const Json& obj, const std::string& location, std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional) {
  if (!obj.is_object()) fail("schema", location, "expected an object");
  for (const char* key : required) {
    if (!obj.contains(key)) fail("schema", location, std::string("missing field '") + key + "'");
  }
  for (const auto& [key, value] : obj.items()) {
    const auto known = [&](std::initializer_list<const char*> keys) {
      for (const char* k : keys)
        if (key == k) return true;
      return false;
    };
    if (!known(required) && !known(optional)) fail("schema", location, "unknown field '" + key + "'");
  }
}

inline std::int64_t parse_int(const Json& v, const std::string& location, const std::string& code = "schema") {
  if (!v.is_number_integer()) fail(code, location, "expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

inline WeightVector parse_int_vector(const Json& v, const std::string& location) {
  if (!v.is_array()) fail("schema", location, "expected an array of integers");
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < v.size(); ++i) {
    coords.push_back(parse_int(v[i], location + "[" + std::to_string(i) + "]", "non_integer_weight"));
  }
  return WeightVector::from_integers(coords);
}

inline Rational parse_rational_string(const Json& v, const std::string& location) {
  if (!v.is_string()) fail("schema", location, "expected a rational string \"p/q\", got " + v.dump());
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    fail("schema", location, e.what());
  }
}

inline Polynomial parse_rational_poly(const Json& v, const std::string& location) {
  if (!v.is_array()) fail("schema", location, "expected an array of rational strings");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    coeffs.push_back(parse_rational_string(v[i], location + "[" + std::to_string(i) + "]"));
  }
  return Polynomial(std::move(coeffs));
}

inline Json int_vector_json(const WeightVector& w) {
  Json out = Json::array();
  for (auto c : w.to_integers()) out.push_back(c);
  return out;
}

inline Json rational_vector_json(const WeightVector& w) {
  Json out = Json::array();
  for (const auto& c : w.coords()) out.push_back(to_string(c));
  return out;
}

inline Json poly_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& s : p.coefficient_strings()) out.push_back(s);
  return out;
}

}  // namespace qrmult::detail
