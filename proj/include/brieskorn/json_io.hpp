#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/tuple.hpp"

namespace brieskorn::json_io {

// Integers travel as decimal strings so nothing is squeezed through a double.

using Json = nlohmann::ordered_json;

inline Json encode(const BigInt& x) { return x.str(); }

inline Json encode(const BigRational& q) {
  return Json{{"num", q.num().str()}, {"den", q.den().str()}};
}

inline Json encode(const ExponentTuple& a) {
  Json arr = Json::array();
  for (const auto& x : a.entries()) arr.push_back(x.str());
  return arr;
}

inline BigInt decode_bigint(const Json& j) {
  if (!j.is_string()) throw InvalidInput("expected an integer as a decimal string");
  return parse_bigint(j.get<std::string>());
}

inline BigRational decode_rational(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw InvalidInput("expected a rational {\"num\", \"den\"}");
  }
  BigRational q(decode_bigint(j.at("num")), decode_bigint(j.at("den")));
  if (q.num() != decode_bigint(j.at("num")) || q.den() != decode_bigint(j.at("den"))) {
    throw InvalidInput("rational " + q.str() + " is not stored in lowest terms");
  }
  return q;
}

inline ExponentTuple decode_tuple(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a tuple as an array of decimal strings");
  std::vector<BigInt> entries;
  for (const auto& e : j) entries.push_back(decode_bigint(e));
  return ExponentTuple::make(std::move(entries));
}

}  // namespace brieskorn::json_io
