#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/counting.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/limits.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/topology.hpp"
#include "brieskorn/tuple.hpp"

namespace brieskorn {

// The Reeb flow rotates z_j with speed 1/a_j. A point's minimal period is
// the lcm of a_j over its nonzero coordinates, and every point has at least
// two of those, so the minimal periods are the lcms of the >= 2 subsets.

/// Minimal Reeb periods T_1 < ... < T_k = d, ascending.
inline std::vector<BigInt> reeb_periods(const ExponentTuple& a,
                                        const Limits& limits = kDefaultLimits) {
  check_subset_cap(a, limits);
  std::vector<BigInt> periods;
  struct Frame {
    std::size_t next;
    std::size_t size;
    BigInt l;
  };
  std::vector<Frame> stack{{0, 0, BigInt(1)}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.size >= 2) periods.push_back(fr.l);
    for (std::size_t j = fr.next; j < a.size(); ++j) {
      stack.push_back({j + 1, fr.size + 1, brieskorn::lcm(fr.l, a[j])});
    }
  }
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
  return periods;
}

/// Fixed-point set of the time-T Reeb flow.
struct Stratum {
  BigInt period;
  /// Indices j with a_j | T.
  std::vector<std::size_t> indices;
  ExponentTuple subtuple;
  std::size_t m = 0;            ///< number of exponents dividing T
  long long dim = 0;            ///< 2m - 3
  long long quotient_dim = 0;   ///< 2m - 4, dimension of the orbit space
  BigInt mu_rs;                 ///< Robbin-Salamon index
  BigInt chi_s1;
  BigInt frequency;
  bool frequency_cross_checked = false;
};

/// sum_j (floor(T/a_j) + ceil(T/a_j)) - 2T
inline BigInt stratum_mu_rs(const ExponentTuple& a, const BigInt& period) {
  BigInt mu = -2 * period;
  for (const auto& aj : a.entries()) mu += floor_div(period, aj) + ceil_div(period, aj);
  return mu;
}

namespace detail {

inline Stratum make_stratum(const ExponentTuple& a, const BigInt& period, const Limits& limits) {
  if (period < 1) throw InvalidInput("Reeb period must be positive, got " + period.str());
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (divides(a[j], period)) idx.push_back(j);
  }
  if (idx.size() < 2) {
    throw InvalidInput(period.str() + " is not a Reeb period of " + a.str() +
                       ": fewer than two exponents divide it");
  }
  ExponentTuple b = a.subtuple(idx);
  if (b.lcm() != period) {
    throw InvalidInput(period.str() + " is not a Reeb period of " + a.str() +
                       ": the dividing exponents have lcm " + b.lcm().str());
  }
  Stratum s{period, idx, b};
  s.m = idx.size();
  s.dim = 2 * static_cast<long long>(s.m) - 3;
  s.quotient_dim = 2 * static_cast<long long>(s.m) - 4;
  s.mu_rs = stratum_mu_rs(a, period);
  s.chi_s1 = chi_s1(s.subtuple, limits);
  return s;
}

inline bool is_even(const BigInt& x) { return x % 2 == 0; }

}  // namespace detail

/// Frequencies with the per-entry cross-check flag. The periods must be
/// strictly increasing and each must divide the last one.
inline std::vector<MultipleCount> frequency_counts(std::span<const BigInt> periods,
                                                   const Limits& limits = kDefaultLimits) {
  if (periods.empty()) throw InvalidInput("frequencies of an empty period list");
  const BigInt& top = periods.back();
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] < 1) throw InvalidInput("periods must be positive");
    if (i > 0 && periods[i] <= periods[i - 1]) {
      throw InvalidInput("periods must be strictly increasing");
    }
    if (!divides(periods[i], top)) {
      throw InvalidInput("period " + periods[i].str() + " does not divide " + top.str());
    }
  }
  std::vector<MultipleCount> out;
  out.reserve(periods.size());
  for (std::size_t i = 0; i + 1 < periods.size(); ++i) {
    out.push_back(count_multiples(periods[i], top, periods.subspan(i + 1), limits));
  }
  out.push_back({BigInt(1), false});  // the top period counts once by convention
  return out;
}

inline std::vector<BigInt> frequencies(std::span<const BigInt> periods,
                                       const Limits& limits = kDefaultLimits) {
  std::vector<BigInt> out;
  for (auto& c : frequency_counts(periods, limits)) out.push_back(std::move(c.value));
  return out;
}

/// The stratum of period T, including its frequency.
inline Stratum stratum(const ExponentTuple& a, const BigInt& period,
                       const Limits& limits = kDefaultLimits) {
  Stratum s = detail::make_stratum(a, period, limits);
  const std::vector<BigInt> periods = reeb_periods(a, limits);
  const auto it = std::lower_bound(periods.begin(), periods.end(), period);
  const auto pos = static_cast<std::size_t>(it - periods.begin());
  if (pos + 1 == periods.size()) {
    s.frequency = 1;
  } else {
    auto c = count_multiples(period, a.lcm(),
                             std::span<const BigInt>(periods).subspan(pos + 1), limits);
    s.frequency = std::move(c.value);
    s.frequency_cross_checked = c.cross_checked;
  }
  return s;
}

/// Robbin-Salamon index of the whole manifold: 2 d (sum_j 1/a_j - 1).
inline BigInt total_mu_rs(const ExponentTuple& a) {
  const BigInt& d = a.lcm();
  BigInt s = -d;
  for (const auto& aj : a.entries()) s += d / aj;
  return 2 * s;
}

inline bool has_isolated_exponent(const ExponentTuple& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool isolated = true;
    for (std::size_t j = 0; j < a.size() && isolated; ++j) {
      if (i != j && gcd(a[i], a[j]) != 1) isolated = false;
    }
    if (isolated) return true;
  }
  return false;
}

struct MeanEulerReport {
  ExponentTuple tuple;
  BigInt total_mu_rs;
  /// Present iff total_mu_rs != 0.
  std::optional<BigRational> value;
  /// Ascending by period; the last one is T = d with frequency 1.
  std::vector<Stratum> strata;
  /// (-1)^(n+1)
  int global_sign = 1;
  /// sum_i (-1)^(mu_i - quotient_dim_i / 2) * phi_i * chi_i
  BigInt stratum_signed_sum;
  /// sum_i phi_i * chi_i
  BigInt unsigned_sum;

  bool defined() const { return value.has_value(); }
};

/// Mean Euler characteristic from the stratified period sum. The value is
/// computed with per-stratum signs and again with the global sign; the two
/// must agree.
inline MeanEulerReport mean_euler(const ExponentTuple& a, const Limits& limits = kDefaultLimits) {
  MeanEulerReport r{a, total_mu_rs(a)};
  r.global_sign = (a.n() + 1) % 2 == 0 ? 1 : -1;
  const std::vector<BigInt> periods = reeb_periods(a, limits);
  const std::vector<MultipleCount> freq = frequency_counts(periods, limits);
  const long long parity_target = static_cast<long long>(a.n() + 1);

  for (std::size_t i = 0; i < periods.size(); ++i) {
    Stratum s = detail::make_stratum(a, periods[i], limits);
    s.frequency = freq[i].value;
    s.frequency_cross_checked = freq[i].cross_checked;

    // mu_RS = (n + 1) - m (mod 2), hence mu_RS - (m - 2) = n + 1 (mod 2)
    const BigInt half_quotient = s.quotient_dim / 2;
    if (!detail::is_even(s.mu_rs - (parity_target - static_cast<long long>(s.m))) ||
        !detail::is_even(s.mu_rs - half_quotient - parity_target)) {
      throw InternalError("index parity violated at T = " + s.period.str() + " for " + a.str());
    }
    const BigInt term = s.frequency * s.chi_s1;
    if (detail::is_even(s.mu_rs - half_quotient)) {
      r.stratum_signed_sum += term;
    } else {
      r.stratum_signed_sum -= term;
    }
    r.unsigned_sum += term;
    r.strata.push_back(std::move(s));
  }

  if (r.total_mu_rs != 0) {
    const BigInt denom = brieskorn::abs(r.total_mu_rs);
    BigRational by_stratum(r.stratum_signed_sum, denom);
    BigRational by_global(r.global_sign * r.unsigned_sum, denom);
    if (by_stratum != by_global) {
      throw InternalError("sign routes disagree for " + a.str() + ": " + by_stratum.str() +
                          " vs " + by_global.str());
    }
    r.value = std::move(by_stratum);
  }
  return r;
}

/// Closed form for pairwise coprime exponents:
/// (-1)^(n+1) * sum_{s<n} (n-s) e_s(a_j - 1) / (2 |sum_j prod/a_j - prod|),
/// with e_s the elementary symmetric polynomials.
inline BigRational mean_euler_coprime(const ExponentTuple& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const BigInt g = gcd(a[i], a[j]);
      if (g != 1) {
        throw PreconditionError("exponents are not pairwise coprime: gcd(a_" + std::to_string(i) +
                                ", a_" + std::to_string(j) + ") = gcd(" + a[i].str() + ", " +
                                a[j].str() + ") = " + g.str());
      }
    }
  }
  const std::size_t L = a.size();
  const std::size_t n = L - 1;
  // e[s] = elementary symmetric polynomial of degree s in (a_j - 1)
  std::vector<BigInt> e(L + 1, BigInt(0));
  e[0] = 1;
  for (const auto& aj : a.entries()) {
    for (std::size_t s = L; s >= 1; --s) e[s] += e[s - 1] * (aj - 1);
  }
  BigInt bracket = 0;
  for (std::size_t s = 0; s < n; ++s) bracket += static_cast<long long>(n - s) * e[s];

  BigInt prod = 1;
  for (const auto& aj : a.entries()) prod *= aj;
  BigInt cofactors = 0;
  for (const auto& aj : a.entries()) cofactors += prod / aj;
  const BigInt denom = 2 * brieskorn::abs(BigInt(cofactors - prod));
  if (denom == 0) throw InternalError("vanishing closed-form denominator for " + a.str());
  const int sign = (n + 1) % 2 == 0 ? 1 : -1;
  return BigRational(sign * bracket, denom);
}

/// Mean Euler characteristic of the standard sphere under the sum formula:
/// the value z with chi(x # z) = chi(x), namely (-1)^(n+1) / 2.
inline BigRational connected_sum_neutral(long long n) {
  return BigRational(n % 2 == 0 ? -1 : 1, 2);
}

/// chi(x_1 # ... # x_k) = sum x_i + (k - 1) (-1)^n / 2 in dimension 2n - 1.
inline BigRational connected_sum_chi(std::span<const BigRational> values, long long n) {
  if (values.empty()) throw InvalidInput("connected sum of no summands");
  if (n < 2) throw InvalidInput("connected sum needs n >= 2, got " + std::to_string(n));
  BigRational total;
  for (const auto& v : values) total += v;
  const BigRational step(n % 2 == 0 ? 1 : -1, 2);
  return total + BigRational(static_cast<long long>(values.size() - 1)) * step;
}

}  // namespace brieskorn
