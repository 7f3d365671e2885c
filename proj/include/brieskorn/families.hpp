#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/check.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/limits.hpp"
#include "brieskorn/polynomial.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/reeb.hpp"
#include "brieskorn/topology.hpp"
#include "brieskorn/tuple.hpp"

namespace brieskorn {

// ---------------------------------------------------------------------------
// Sigma_m = Sigma(m, m+1, 2m+1, 4m+3)
// ---------------------------------------------------------------------------

inline ExponentTuple sigma_m_tuple(const BigInt& m) {
  if (m < 2) throw InvalidInput("sigma_m needs m >= 2, got " + m.str());
  return ExponentTuple::make(std::vector<BigInt>{m, m + 1, 2 * m + 1, 4 * m + 3});
}

/// 21m^2 + 17m + 3
inline IntPolynomial sigma_m_numerator() { return IntPolynomial{3, 17, 21}; }
/// 16m^4 - 8m^3 - 50m^2 - 34m - 6
inline IntPolynomial sigma_m_denominator() { return IntPolynomial{-6, -34, -50, -8, 16}; }

/// Expected coefficients of g'h - h'g, ascending.
inline IntPolynomial sigma_m_expected_wronskian() {
  return IntPolynomial{0, 48, 208, 80, -648, -672};
}

/// g'h - h'g for g, h the numerator and denominator above.
inline IntPolynomial sigma_m_wronskian() {
  const IntPolynomial g = sigma_m_numerator();
  const IntPolynomial h = sigma_m_denominator();
  return g.derivative() * h - h.derivative() * g;
}

inline bool sigma_m_closed_form_applies(const BigInt& m) { return m >= 2 && gcd(m, 3) == 1; }

/// Rational closed form of the mean Euler characteristic of Sigma_m. Only
/// valid when 3 does not divide m (then the exponents are pairwise coprime).
inline BigRational sigma_m_closed_form(const BigInt& m) {
  if (m < 2) throw InvalidInput("sigma_m needs m >= 2, got " + m.str());
  if (gcd(m, 3) != 1) {
    throw PreconditionError("closed form needs gcd(m, 3) = 1, got m = " + m.str());
  }
  return BigRational(sigma_m_numerator().evaluate(m), sigma_m_denominator().evaluate(m));
}

struct FamilyRow {
  BigInt parameter;
  ExponentTuple tuple;
  SphereVerdict verdict;
  bool pairwise_coprime = false;
  /// Absent when the mean Euler characteristic is undefined.
  std::optional<BigRational> chi_m;
  std::optional<BigRational> closed_form;
  /// chi_m == closed_form, when a closed form exists.
  std::optional<bool> agrees;
};

inline FamilyRow sigma_m_row(const BigInt& m, const Limits& limits = kDefaultLimits) {
  ExponentTuple a = sigma_m_tuple(m);
  FamilyRow row{m, a, evaluate_criterion(a), is_pairwise_coprime(a)};
  row.chi_m = mean_euler(a, limits).value;
  if (sigma_m_closed_form_applies(m)) {
    row.closed_form = sigma_m_closed_form(m);
    row.agrees = row.chi_m.has_value() && *row.chi_m == *row.closed_form;
  }
  return row;
}

inline std::vector<FamilyRow> sigma_m_rows(const BigInt& from, const BigInt& to,
                                           const Limits& limits = kDefaultLimits) {
  if (from < 2) throw InvalidInput("sigma_m range must start at m >= 2, got " + from.str());
  if (to < from) throw InvalidInput("sigma_m range is empty: " + from.str() + " > " + to.str());
  std::vector<FamilyRow> rows;
  for (BigInt m = from; m <= to; ++m) rows.push_back(sigma_m_row(m, limits));
  return rows;
}

struct SigmaFamilyReport {
  std::vector<FamilyRow> rows;
  IntPolynomial wronskian;
  DominanceWitness dominance;
  std::vector<Check> checks;
  /// Comparisons involving 3 | m, reported without being asserted.
  std::vector<std::string> notes;

  bool passed() const { return all_passed(checks); }
};

/// Exact checks over [m_low, m_high]: closed-form agreement, strict decrease
/// over the m with gcd(m, 3) = 1, the g'h - h'g coefficients, denominator
/// dominance on |m| = 3, and the sign of g'h - h'g on the range.
inline SigmaFamilyReport verify_sigma_family(const BigInt& m_low, const BigInt& m_high,
                                             const Limits& limits = kDefaultLimits) {
  if (m_low < 4 || m_high <= m_low) {
    throw InvalidInput("verification range must satisfy 4 <= low < high, got [" + m_low.str() +
                       ", " + m_high.str() + "]");
  }
  SigmaFamilyReport r;
  r.rows = sigma_m_rows(m_low, m_high, limits);

  Check agree{"closed form agrees with the stratified sum", true, ""};
  std::size_t compared = 0;
  for (const auto& row : r.rows) {
    if (!row.agrees) continue;
    ++compared;
    if (!*row.agrees) {
      agree.passed = false;
      agree.detail += "m=" + row.parameter.str() + " ";
    }
  }
  if (agree.passed) agree.detail = std::to_string(compared) + " values of m";
  r.checks.push_back(agree);

  Check decreasing{"strictly decreasing over m coprime to 3", true, ""};
  const FamilyRow* prev = nullptr;
  const FamilyRow* prev_any = nullptr;
  for (const auto& row : r.rows) {
    if (prev_any && prev_any->chi_m && row.chi_m && !(*row.chi_m < *prev_any->chi_m) &&
        (!sigma_m_closed_form_applies(row.parameter) ||
         !sigma_m_closed_form_applies(prev_any->parameter))) {
      r.notes.push_back("m=" + row.parameter.str() + ": " + row.chi_m->str() +
                        " is not below m=" + prev_any->parameter.str() + ": " +
                        prev_any->chi_m->str());
    }
    prev_any = &row;
    if (!sigma_m_closed_form_applies(row.parameter)) continue;
    if (prev && !(row.chi_m && prev->chi_m && *row.chi_m < *prev->chi_m)) {
      decreasing.passed = false;
      decreasing.detail += "m=" + prev->parameter.str() + "->" + row.parameter.str() + " ";
    }
    prev = &row;
  }
  r.checks.push_back(decreasing);

  r.wronskian = sigma_m_wronskian();
  r.checks.push_back({"g'h - h'g = -672m^5 - 648m^4 + 80m^3 + 208m^2 + 48m",
                      r.wronskian == sigma_m_expected_wronskian(), r.wronskian.str()});

  r.dominance = dominance_witness(sigma_m_denominator(), 3);
  r.checks.push_back({"denominator dominance on |m| = 3", r.dominance.dominates,
                      r.dominance.leading_term.str() + " > " + r.dominance.lower_terms.str()});

  Check negative{"g'h - h'g < 0 on the range", true, ""};
  for (BigInt m = m_low; m <= m_high; ++m) {
    if (r.wronskian.evaluate(m) >= 0) {
      negative.passed = false;
      negative.detail += "m=" + m.str() + " ";
    }
  }
  r.checks.push_back(negative);
  return r;
}

// ---------------------------------------------------------------------------
// Fermat numbers F_l = 2^(2^l) + 1
// ---------------------------------------------------------------------------

inline BigInt fermat(std::size_t ell, const Limits& limits = kDefaultLimits) {
  if (ell > limits.fermat_cap) {
    throw CapacityError("Fermat index " + std::to_string(ell) + " exceeds the cap of " +
                        std::to_string(limits.fermat_cap) + " (raise --cap-fermat)");
  }
  BigInt f = 1;
  f <<= (std::size_t{1} << ell);
  return f + 1;
}

/// F_l == F_0 * ... * F_(l-1) + 2
inline bool fermat_recursion_holds(std::size_t ell, const Limits& limits = kDefaultLimits) {
  BigInt prod = 1;
  for (std::size_t i = 0; i < ell; ++i) prod *= fermat(i, limits);
  return fermat(ell, limits) == prod + 2;
}

/// (F_l, ..., F_(l+n)). The product recursion is checked for every index up
/// to l + n and the entries are checked to be pairwise coprime.
inline ExponentTuple fermat_tuple(std::size_t ell, std::size_t n,
                                  const Limits& limits = kDefaultLimits) {
  if (n < 2) throw InvalidInput("Fermat tuple needs n >= 2, got " + std::to_string(n));
  if (ell + n > limits.fermat_cap) {
    throw CapacityError("Fermat tuple up to index " + std::to_string(ell + n) +
                        " exceeds the cap of " + std::to_string(limits.fermat_cap) +
                        " (raise --cap-fermat)");
  }
  std::vector<BigInt> all;
  BigInt prod = 1;
  for (std::size_t i = 0; i <= ell + n; ++i) {
    all.push_back(fermat(i, limits));
    if (i >= 1 && all[i] != prod + 2) {
      throw InternalError("Fermat recursion fails at index " + std::to_string(i));
    }
    prod *= all[i];
  }
  ExponentTuple a = ExponentTuple::make(std::vector<BigInt>(all.begin() + ell, all.end()));
  if (!is_pairwise_coprime(a)) {
    throw InternalError("Fermat numbers from index " + std::to_string(ell) + " share a factor");
  }
  return a;
}

struct FermatRow {
  std::size_t ell = 0;
  ExponentTuple tuple;
  BigRational chi_m;
  /// (-1)^(n+1) chi_m
  BigRational signed_chi;
  /// signed_chi * 2 x^3 with x = 2^(2^l)
  BigRational ratio;
  /// (-1)^(n+1) chi_m(a # a)
  BigRational signed_self_sum;
};

struct FermatAsymptoticsReport {
  std::size_t n = 0;
  std::vector<FermatRow> rows;
  /// First l in range with signed_chi < 1/4.
  std::optional<std::size_t> first_below_quarter;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

inline FermatAsymptoticsReport fermat_asymptotics(std::size_t ell_low, std::size_t ell_high,
                                                  std::size_t n,
                                                  const Limits& limits = kDefaultLimits) {
  if (ell_high < ell_low) throw InvalidInput("empty Fermat index range");
  FermatAsymptoticsReport r;
  r.n = n;
  const int sign = (n + 1) % 2 == 0 ? 1 : -1;
  const BigRational quarter(1, 4);
  for (std::size_t ell = ell_low; ell <= ell_high; ++ell) {
    ExponentTuple a = fermat_tuple(ell, n, limits);
    const BigRational chi = mean_euler_coprime(a);
    BigInt x = 1;
    x <<= (std::size_t{1} << ell);
    const BigRational signed_chi = BigRational(sign) * chi;
    const BigRational pair[] = {chi, chi};
    const BigRational self_sum = connected_sum_chi(pair, static_cast<long long>(n));
    r.rows.push_back({ell, a, chi, signed_chi, signed_chi * BigRational(2 * x * x * x),
                      BigRational(sign) * self_sum});
    if (!r.first_below_quarter && signed_chi < quarter) r.first_below_quarter = ell;
  }

  Check positive{"(-1)^(n+1) chi_m > 0", true, ""};
  for (const auto& row : r.rows) {
    if (row.signed_chi <= BigRational(0)) {
      positive.passed = false;
      positive.detail += "l=" + std::to_string(row.ell) + " ";
    }
  }
  r.checks.push_back(positive);

  Check approach{"ratio (-1)^(n+1) chi_m 2x^3 approaches 1 monotonically", true, ""};
  Check decreasing{"(-1)^(n+1) chi_m strictly decreasing", true, ""};
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    const BigRational prev_gap = abs(r.rows[i - 1].ratio - BigRational(1));
    const BigRational gap = abs(r.rows[i].ratio - BigRational(1));
    if (!(gap < prev_gap)) {
      approach.passed = false;
      approach.detail += "l=" + std::to_string(r.rows[i].ell) + " ";
    }
    if (!(r.rows[i].signed_chi < r.rows[i - 1].signed_chi)) {
      decreasing.passed = false;
      decreasing.detail += "l=" + std::to_string(r.rows[i].ell) + " ";
    }
  }
  r.checks.push_back(approach);
  r.checks.push_back(decreasing);

  Check below{"(-1)^(n+1) chi_m in (0, 1/4) and self-sum negative from the first such l", true,
              ""};
  if (!r.first_below_quarter) {
    below.passed = false;
    below.detail = "no l in range has (-1)^(n+1) chi_m < 1/4";
  } else {
    below.detail = "from l=" + std::to_string(*r.first_below_quarter);
    for (const auto& row : r.rows) {
      if (row.ell < *r.first_below_quarter) continue;
      if (!(row.signed_chi > BigRational(0) && row.signed_chi < quarter &&
            row.signed_self_sum < BigRational(0))) {
        below.passed = false;
        below.detail += "; fails at l=" + std::to_string(row.ell);
      }
    }
  }
  r.checks.push_back(below);
  return r;
}

}  // namespace brieskorn
