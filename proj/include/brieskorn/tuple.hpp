#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"

namespace brieskorn {

/// Exponents (a_0, ..., a_n) of a Brieskorn manifold: at least two entries,
/// each >= 2. Immutable once constructed; d = lcm of the entries is cached.
class ExponentTuple {
 public:
  /// Validates and builds a tuple; errors name the offending index.
  static ExponentTuple make(std::vector<BigInt> entries) {
    if (entries.size() < 2) {
      throw InvalidInput("exponent tuple needs at least 2 entries, got " +
                         std::to_string(entries.size()));
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] < 2) {
        throw InvalidInput("exponent at index " + std::to_string(i) + " is " +
                           entries[i].str() + ", entries must be >= 2");
      }
    }
    return ExponentTuple(std::move(entries));
  }
  static ExponentTuple make(std::initializer_list<long long> entries) {
    return make(std::vector<BigInt>(entries.begin(), entries.end()));
  }

  std::span<const BigInt> entries() const { return entries_; }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  /// n, with the tuple indexed 0..n.
  std::size_t n() const { return entries_.size() - 1; }
  /// Dimension 2n - 1 of the manifold.
  std::size_t dimension() const { return 2 * n() - 1; }
  /// d = lcm(a_0, ..., a_n).
  const BigInt& lcm() const { return lcm_; }

  /// Entries sorted ascending.
  ExponentTuple canonical() const {
    auto sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    return ExponentTuple(std::move(sorted));
  }

  /// The tuple on the given indices (kept in the given order).
  ExponentTuple subtuple(std::span<const std::size_t> indices) const {
    std::vector<BigInt> sub;
    sub.reserve(indices.size());
    for (std::size_t i : indices) sub.push_back(entries_.at(i));
    return make(std::move(sub));
  }

  /// "(4,5,9,19)"
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += entries_[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const ExponentTuple& a, const ExponentTuple& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const ExponentTuple& a, const ExponentTuple& b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                        b.entries_.begin(), b.entries_.end());
  }
  friend std::ostream& operator<<(std::ostream& os, const ExponentTuple& a) {
    return os << a.str();
  }

 private:
  explicit ExponentTuple(std::vector<BigInt> entries)
      : entries_(std::move(entries)), lcm_(lcm_all(entries_)) {}

  std::vector<BigInt> entries_;
  BigInt lcm_;
};

inline ExponentTuple make_tuple(std::vector<BigInt> entries) {
  return ExponentTuple::make(std::move(entries));
}

inline bool is_pairwise_coprime(const ExponentTuple& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (gcd(a[i], a[j]) != 1) return false;
    }
  }
  return true;
}

/// Visits every index subset of {0..size-1} with at least min_size elements,
/// by increasing size and index-lexicographically within a size.
template <typename Visit>
void for_each_index_subset(std::size_t size, std::size_t min_size, Visit&& visit) {
  std::vector<std::size_t> idx;
  for (std::size_t k = min_size; k <= size; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      visit(std::span<const std::size_t>(idx));
      // advance to the next k-combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == size - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace brieskorn
