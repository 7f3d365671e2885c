#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "brieskorn/errors.hpp"

namespace brieskorn {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Nonnegative gcd; gcd(0, 0) is 0.
inline BigInt gcd(const BigInt& x, const BigInt& y) {
  if (x == 0) return abs(y);
  if (y == 0) return abs(x);
  return boost::multiprecision::gcd(abs(x), abs(y));
}

inline BigInt lcm(const BigInt& x, const BigInt& y) {
  if (x <= 0 || y <= 0) {
    throw InvalidInput("lcm: arguments must be positive, got " + x.str() +
                       " and " + y.str());
  }
  return x / gcd(x, y) * y;
}

/// lcm of a sequence; the empty lcm is 1.
inline BigInt lcm_all(std::span<const BigInt> xs) {
  BigInt acc = 1;
  for (const auto& x : xs) acc = lcm(acc, x);
  return acc;
}

inline bool divides(const BigInt& d, const BigInt& x) { return x % d == 0; }

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal integer. Rejects anything else.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw InvalidInput("not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

/// Narrowing to uint64 when the value fits.
inline std::optional<std::uint64_t> to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return x.convert_to<std::uint64_t>();
}

/// Floor and ceiling of x / y for y > 0.
inline BigInt floor_div(const BigInt& x, const BigInt& y) {
  BigInt q = x / y;
  if (x % y != 0 && x < 0) q -= 1;
  return q;
}

inline BigInt ceil_div(const BigInt& x, const BigInt& y) {
  BigInt q = x / y;
  if (x % y != 0 && x > 0) q += 1;
  return q;
}

}  // namespace brieskorn
