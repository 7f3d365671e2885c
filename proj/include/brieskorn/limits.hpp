#pragma once

#include <cstddef>
#include <cstdint>

namespace brieskorn {

/// Caps and thresholds shared by the enumeration and counting layers.
struct Limits {
  /// Largest tuple length for which all 2^L subsets are enumerated.
  std::size_t subset_cap = 24;
  /// Largest divisibility antichain handled by inclusion-exclusion.
  std::size_t antichain_cap = 24;
  /// Largest Fermat index ell + n that may be generated.
  std::size_t fermat_cap = 12;
  /// Largest multiplier range for which the direct count also runs.
  std::uint64_t direct_count_limit = 1'000'000;
  /// Largest number of candidate tuples the sphere search will visit.
  std::uint64_t search_budget = 50'000'000;
};

inline constexpr Limits kDefaultLimits{};

}  // namespace brieskorn
