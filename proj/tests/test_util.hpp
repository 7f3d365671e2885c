#pragma once

#include <cstdint>
#include <vector>

#include "brieskorn.hpp"

namespace testutil {

inline brieskorn::ExponentTuple tuple_of(const std::vector<std::uint64_t>& a) {
  return brieskorn::ExponentTuple::make(std::vector<brieskorn::BigInt>(a.begin(), a.end()));
}

inline std::vector<brieskorn::BigInt> bigs(std::initializer_list<long long> xs) {
  return std::vector<brieskorn::BigInt>(xs.begin(), xs.end());
}

inline brieskorn::BigRational q(long long num, long long den = 1) {
  return brieskorn::BigRational(num, den);
}

}  // namespace testutil
