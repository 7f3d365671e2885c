#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/limits.hpp"

namespace brieskorn {

// Counts natural numbers a with a * base < bound and a * base not a multiple
// of any forbidden entry. Two independent strategies live here: a direct
// loop and inclusion-exclusion over the divisor lattice.

namespace detail {

inline void check_count_args(const BigInt& base, const BigInt& bound,
                             std::span<const BigInt> forbidden) {
  if (base < 1) throw InvalidInput("count: base must be >= 1, got " + base.str());
  if (bound < 1) throw InvalidInput("count: bound must be >= 1, got " + bound.str());
  for (const auto& f : forbidden) {
    if (f < 1) throw InvalidInput("count: forbidden entries must be >= 1, got " + f.str());
  }
}

}  // namespace detail

/// Number of multipliers a in [1, (bound - 1) / base].
inline BigInt multiplier_range(const BigInt& base, const BigInt& bound) {
  return (bound - 1) / base;
}

/// Direct enumeration of every multiple of base below bound.
inline BigInt count_multiples_direct(const BigInt& base, const BigInt& bound,
                                     std::span<const BigInt> forbidden) {
  detail::check_count_args(base, bound, forbidden);
  const auto b64 = to_u64(base);
  const auto n64 = to_u64(bound);
  if (b64 && n64) {
    std::vector<std::uint64_t> fs;
    for (const auto& f : forbidden) {
      // a multiple of f that is >= f cannot lie below bound when f >= bound
      if (f < bound) fs.push_back(f.convert_to<std::uint64_t>());
    }
    std::uint64_t count = 0;
    for (std::uint64_t x = *b64; x < *n64; x += *b64) {
      bool hit = false;
      for (std::uint64_t f : fs) {
        if (x % f == 0) {
          hit = true;
          break;
        }
      }
      if (!hit) ++count;
    }
    return count;
  }
  BigInt count = 0;
  for (BigInt x = base; x < bound; x += base) {
    bool hit = false;
    for (const auto& f : forbidden) {
      if (x % f == 0) {
        hit = true;
        break;
      }
    }
    if (!hit) ++count;
  }
  return count;
}

/// Reduces forbidden moduli to multiplier moduli q = lcm(base, f) / base and
/// keeps only the divisibility-minimal ones, sorted ascending.
inline std::vector<BigInt> multiplier_antichain(const BigInt& base,
                                                std::span<const BigInt> forbidden) {
  std::vector<BigInt> qs;
  qs.reserve(forbidden.size());
  for (const auto& f : forbidden) qs.push_back(lcm(base, f) / base);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<BigInt> minimal;
  for (const auto& q : qs) {
    // qs is ascending, so any divisor of q already sits in minimal
    const bool covered = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const BigInt& r) { return q % r == 0; });
    if (!covered) minimal.push_back(q);
  }
  return minimal;
}

/// Inclusion-exclusion: sum over subsets S of the antichain of
/// (-1)^|S| * floor((bound - 1) / (base * lcm(S))). Branches whose lcm
/// already exceeds the multiplier range contribute zero and are pruned.
inline BigInt count_multiples_inclusion_exclusion(const BigInt& base, const BigInt& bound,
                                                  std::span<const BigInt> forbidden,
                                                  std::size_t antichain_cap) {
  detail::check_count_args(base, bound, forbidden);
  const std::vector<BigInt> qs = multiplier_antichain(base, forbidden);
  if (qs.size() > antichain_cap) {
    throw CapacityError("inclusion-exclusion antichain has " + std::to_string(qs.size()) +
                        " elements, above the cap of " + std::to_string(antichain_cap) +
                        " (raise --cap-antichain)");
  }
  const BigInt range = multiplier_range(base, bound);
  BigInt total = range;

  struct Frame {
    std::size_t next;
    BigInt l;
    int sign;
  };
  std::vector<Frame> stack;
  stack.push_back({0, BigInt(1), 1});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    for (std::size_t j = fr.next; j < qs.size(); ++j) {
      BigInt l = lcm(fr.l, qs[j]);
      if (l > range) continue;
      const int sign = -fr.sign;
      const BigInt term = range / l;
      if (sign > 0) {
        total += term;
      } else {
        total -= term;
      }
      stack.push_back({j + 1, std::move(l), sign});
    }
  }
  return total;
}

struct MultipleCount {
  BigInt value;
  /// Whether the direct loop also ran and agreed.
  bool cross_checked = false;
};

/// Inclusion-exclusion always; the direct loop as well whenever the
/// multiplier range is within limits.direct_count_limit. Disagreement is an
/// InternalError.
inline MultipleCount count_multiples(const BigInt& base, const BigInt& bound,
                                     std::span<const BigInt> forbidden,
                                     const Limits& limits = kDefaultLimits) {
  MultipleCount out;
  out.value = count_multiples_inclusion_exclusion(base, bound, forbidden, limits.antichain_cap);
  if (multiplier_range(base, bound) <= limits.direct_count_limit) {
    const BigInt direct = count_multiples_direct(base, bound, forbidden);
    if (direct != out.value) {
      throw InternalError("multiple count mismatch for base " + base.str() + ", bound " +
                          bound.str() + ": direct " + direct.str() +
                          " vs inclusion-exclusion " + out.value.str());
    }
    out.cross_checked = true;
  }
  return out;
}

inline BigInt count_multiples_avoiding(const BigInt& base, const BigInt& bound,
                                       std::span<const BigInt> forbidden,
                                       const Limits& limits = kDefaultLimits) {
  return count_multiples(base, bound, forbidden, limits).value;
}

}  // namespace brieskorn
