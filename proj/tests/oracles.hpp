#pragma once

// Brute-force reference computations for the tests. They use plain 64-bit
// arithmetic and literal definitions, independent of the library paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

/// Sum over all subsets I of (-1)^(L-|I|) prod(a_I) / lcm(a_I), by bitmask.
inline long long kappa(const std::vector<u64>& a) {
  const std::size_t L = a.size();
  long long total = 0;
  for (u64 mask = 0; mask < (u64{1} << L); ++mask) {
    unsigned __int128 prod = 1;
    u64 l = 1;
    int k = 0;
    for (std::size_t j = 0; j < L; ++j) {
      if (mask >> j & 1) {
        prod *= a[j];
        l = std::lcm(l, a[j]);
        ++k;
      }
    }
    const long long q = static_cast<long long>(prod / l);
    total += ((L - k) % 2 == 0) ? q : -q;
  }
  return total;
}

/// Smallest T >= 1 divisible by every a_j with j in mask, by linear search.
inline u64 minimal_common_period(const std::vector<u64>& a, u64 mask) {
  for (u64 t = 1;; ++t) {
    bool ok = true;
    for (std::size_t j = 0; j < a.size() && ok; ++j) {
      if ((mask >> j & 1) && t % a[j] != 0) ok = false;
    }
    if (ok) return t;
  }
}

/// Minimal periods of the points whose support is `mask`, over all masks with
/// at least two bits, deduplicated and sorted.
inline std::vector<u64> periods(const std::vector<u64>& a) {
  std::vector<u64> out;
  for (u64 mask = 0; mask < (u64{1} << a.size()); ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    out.push_back(minimal_common_period(a, mask));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// #{x : x * periods[i] < periods.back(), not a multiple of any later period};
/// 1 for the last entry.
inline std::vector<u64> frequencies(const std::vector<u64>& ps) {
  std::vector<u64> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i + 1 == ps.size()) {
      out.push_back(1);
      break;
    }
    u64 c = 0;
    for (u64 x = 1; x * ps[i] < ps.back(); ++x) {
      bool hit = false;
      for (std::size_t j = i + 1; j < ps.size(); ++j) hit = hit || (x * ps[i]) % ps[j] == 0;
      if (!hit) ++c;
    }
    out.push_back(c);
  }
  return out;
}

inline std::vector<u64> random_tuple(std::mt19937_64& rng, std::size_t min_len,
                                     std::size_t max_len, u64 max_entry) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<u64> entry(2, max_entry);
  std::vector<u64> a(len(rng));
  for (auto& x : a) x = entry(rng);
  return a;
}

}  // namespace oracle
