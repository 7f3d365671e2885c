#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brieskorn/certify.hpp"
#include "brieskorn/check.hpp"
#include "brieskorn/counting.hpp"
#include "brieskorn/families.hpp"
#include "brieskorn/polynomial.hpp"
#include "brieskorn/reeb.hpp"
#include "brieskorn/topology.hpp"

namespace brieskorn {

// End-to-end reproduction suite behind `verify-paper`. Every item is an
// exact check; a thrown library error turns the item into a failure.

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string fmt_seconds(double s) {
  std::string out = std::to_string(s);
  return out.substr(0, out.find('.') + 4) + " s";
}

/// Direct vs inclusion-exclusion frequencies of every period of a, when
/// d <= limit. Returns the number of periods compared, or -1 on mismatch.
inline long long compare_frequency_strategies(const ExponentTuple& a, std::uint64_t limit,
                                              const Limits& limits) {
  if (a.lcm() > limit) return 0;
  const std::vector<BigInt> periods = reeb_periods(a, limits);
  long long compared = 0;
  for (std::size_t i = 0; i + 1 < periods.size(); ++i) {
    const std::span<const BigInt> later = std::span<const BigInt>(periods).subspan(i + 1);
    const BigInt direct = count_multiples_direct(periods[i], a.lcm(), later);
    const BigInt ie =
        count_multiples_inclusion_exclusion(periods[i], a.lcm(), later, limits.antichain_cap);
    if (direct != ie) return -1;
    ++compared;
  }
  return compared;
}

/// Random tuples with length in [2, 6] and entries in [2, 30], fixed seed.
inline std::vector<ExponentTuple> parity_sample(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(2, 6);
  std::uniform_int_distribution<int> entry(2, 30);
  std::vector<ExponentTuple> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<BigInt> e(static_cast<std::size_t>(len(rng)));
    for (auto& x : e) x = entry(rng);
    out.push_back(ExponentTuple::make(std::move(e)));
  }
  return out;
}

}  // namespace detail

struct ReproductionItem {
  std::string id;
  std::function<Check()> run;
};

inline std::vector<ReproductionItem> reproduction_items(const Limits& limits = kDefaultLimits) {
  using detail::fmt_seconds;
  using detail::seconds_since;
  using Clock = std::chrono::steady_clock;
  std::vector<ReproductionItem> items;

  items.push_back({"1", [limits] {
    const auto t0 = Clock::now();
    const ExponentTuple a = sigma_m_tuple(4);
    const MeanEulerReport r = mean_euler(a, limits);
    const BigRational closed = mean_euler_coprime(a);
    const BigRational expected(407, 2642);
    const double s = seconds_since(t0);
    const bool ok = r.value && *r.value == expected && closed == expected && s < 1.0;
    return Check{"chi_m(4,5,9,19) = 407/2642 by stratified sum and coprime closed form", ok,
                 "stratified " + (r.value ? r.value->str() : "undefined") + ", closed form " +
                     closed.str() + ", " + fmt_seconds(s)};
  }});

  items.push_back({"2", [limits] {
    const auto t0 = Clock::now();
    const SigmaFamilyReport rep = verify_sigma_family(4, 200, limits);
    const double s = seconds_since(t0);
    const bool ok = rep.checks.at(0).passed && rep.checks.at(1).passed && s < 30.0;
    return Check{"m in [4,200], gcd(m,3)=1: stratified sum = closed form, strictly decreasing",
                 ok, rep.checks.at(0).detail + ", " + fmt_seconds(s)};
  }});

  items.push_back({"3", [limits] {
    std::vector<ExponentTuple> tuples;
    for (int m : {4, 5, 7, 8, 10}) tuples.push_back(sigma_m_tuple(m));
    std::vector<NonBrieskornCertificate> selfs;
    for (const auto& a : tuples) {
      const ExponentTuple one[] = {a};
      for (auto& c : certify_non_brieskorn_pairs(one, limits)) selfs.push_back(std::move(c));
    }
    const auto classes = distinctness_classes(selfs);
    const bool first_ok = !selfs.empty() && selfs[0].chi_sum == BigRational(-507, 2642) &&
                          !selfs[0].boundary;
    const bool ok = first_ok && selfs.size() == 5 && classes.size() == 5;
    return Check{"chi_m(xi_4 # xi_4) = -507/2642 certified; m in {4,5,7,8,10} distinct", ok,
                 (selfs.empty() ? std::string("no certificate") : selfs[0].chi_sum.str()) +
                     ", " + std::to_string(classes.size()) + " classes"};
  }});

  items.push_back({"4", [] {
    const IntPolynomial w = sigma_m_wronskian();
    return Check{"g'h - h'g = (0, 48, 208, 80, -648, -672) ascending",
                 w == IntPolynomial{0, 48, 208, 80, -648, -672}, w.str()};
  }});

  items.push_back({"5", [] {
    const DominanceWitness w = dominance_witness(sigma_m_denominator(), 3);
    const bool ok = w.dominates && w.leading_term == 1296 && w.lower_terms == 774;
    return Check{"16m^4-8m^3-50m^2-34m-6 dominated on |m|=3: 1296 > 774", ok,
                 w.leading_term.str() + " vs " + w.lower_terms.str()};
  }});

  items.push_back({"6", [limits] {
    const auto sample = detail::parity_sample(1000, 20240601);
    std::size_t strata = 0, defined = 0;
    std::string bad;
    for (const auto& a : sample) {
      const MeanEulerReport r = mean_euler(a, limits);
      const long long n1 = static_cast<long long>(a.n() + 1);
      for (const auto& s : r.strata) {
        ++strata;
        if ((s.mu_rs - (n1 - static_cast<long long>(s.m))) % 2 != 0) bad += a.str() + " ";
      }
      if (r.defined()) {
        ++defined;
        const BigInt denom = abs(r.total_mu_rs);
        if (BigRational(r.stratum_signed_sum, denom) !=
            BigRational(r.global_sign * r.unsigned_sum, denom)) {
          bad += a.str() + " ";
        }
      }
    }
    return Check{"index parity mu_RS(T) = n+1-m_T (mod 2); per-stratum signs = global sign",
                 bad.empty(),
                 bad.empty() ? std::to_string(sample.size()) + " tuples, " +
                                   std::to_string(strata) + " strata, " +
                                   std::to_string(defined) + " defined"
                             : "violations: " + bad};
  }});

  items.push_back({"7", [limits] {
    const auto t0 = Clock::now();
    const auto tuples = enumerate_sphere_tuples(20, 4, limits);
    std::string bad;
    for (const auto& a : tuples) {
      if (!check_subtuple_positivity(a, limits).holds()) bad += a.str() + " ";
      const MeanEulerReport r = mean_euler(a, limits);
      if (!r.value || *r.value <= BigRational(0)) bad += a.str() + " ";
    }
    const double s = seconds_since(t0);
    return Check{"sphere 4-tuples <= 20: triples have kappa = 0, chi_m > 0",
                 bad.empty() && s < 60.0,
                 std::to_string(tuples.size()) + " tuples, " + fmt_seconds(s) +
                     (bad.empty() ? "" : ", failures: " + bad)};
  }});

  items.push_back({"8", [limits] {
    long long compared = 0;
    std::string bad;
    auto scan = [&](const ExponentTuple& a) {
      const long long c = detail::compare_frequency_strategies(a, 1'000'000, limits);
      if (c < 0) {
        bad += a.str() + " ";
      } else {
        compared += c;
      }
    };
    for (const auto& a : detail::parity_sample(1000, 20240601)) scan(a);
    for (const auto& a : enumerate_sphere_tuples(20, 4, limits)) scan(a);
    for (int m = 4; m <= 200; ++m) scan(sigma_m_tuple(m));
    return Check{"frequencies: inclusion-exclusion = direct count wherever d <= 10^6",
                 bad.empty() && compared > 0,
                 std::to_string(compared) + " frequencies compared" +
                     (bad.empty() ? "" : ", mismatches: " + bad)};
  }});

  items.push_back({"9", [limits] {
    bool recursion = true;
    for (std::size_t ell = 1; ell <= 7; ++ell) recursion = recursion && fermat_recursion_holds(ell, limits);
    const ExponentTuple a = fermat_tuple(2, 3, limits);
    const bool sphere = evaluate_criterion(a).kind == SphereKind::SphereByI;
    const bool general_agrees = mean_euler(a, limits).value == mean_euler_coprime(a);
    const FermatAsymptoticsReport rep = fermat_asymptotics(2, 4, 3, limits);
    const bool ok = recursion && sphere && general_agrees && rep.passed() &&
                    rep.first_below_quarter == std::size_t{2};
    return Check{"Fermat: recursion to l=7, (F_2..F_5) SPHERE_BY_I, ratio -> 1, self-sum < 0",
                 ok,
                 std::string(recursion ? "recursion ok" : "recursion FAILS") + ", " +
                     (sphere ? "sphere" : "not sphere") + ", " +
                     (rep.passed() ? "asymptotics ok" : "asymptotics FAIL")};
  }});

  items.push_back({"10", [limits] {
    std::uint64_t visited = 0, isolated = 0;
    std::string bad;
    for (int a0 = 2; a0 <= 30; ++a0)
      for (int a1 = a0; a1 <= 30; ++a1)
        for (int a2 = a1; a2 <= 30; ++a2)
          for (int a3 = a2; a3 <= 30; ++a3) {
            const ExponentTuple a = ExponentTuple::make({a0, a1, a2, a3});
            ++visited;
            if (has_isolated_exponent(a)) {
              ++isolated;
              if (total_mu_rs(a) == 0) bad += a.str() + " ";
            }
          }
    const bool undefined = !mean_euler(ExponentTuple::make({2, 4, 6, 12}), limits).defined();
    return Check{"isolated exponent => total mu_RS != 0; (2,4,6,12) chi_m undefined",
                 bad.empty() && undefined,
                 std::to_string(visited) + " tuples, " + std::to_string(isolated) +
                     " with an isolated exponent" + (bad.empty() ? "" : ", failures: " + bad)};
  }});

  items.push_back({"11", [limits] {
    const ExponentTuple a = ExponentTuple::make({2, 3, 5});
    const MeanEulerReport r = mean_euler(a, limits);
    std::vector<std::pair<long long, long long>> strata;
    for (const auto& s : r.strata) {
      strata.emplace_back(s.period.convert_to<long long>(), s.frequency.convert_to<long long>());
    }
    const std::vector<std::pair<long long, long long>> expected = {{6, 4}, {10, 2}, {15, 1}, {30, 1}};
    const bool ok = r.value == BigRational(-9, 2) && mean_euler_coprime(a) == BigRational(-9, 2) &&
                    strata == expected && r.total_mu_rs == 2;
    return Check{"chi_m(2,3,5) = -9/2 both ways; strata 6:4 10:2 15:1 30:1; total index 2", ok,
                 (r.value ? r.value->str() : "undefined") + ", total " + r.total_mu_rs.str()};
  }});

  return items;
}

struct ReproductionResult {
  std::string id;
  Check check;
  double seconds = 0;
};

inline std::vector<ReproductionResult> run_reproduction_suite(const Limits& limits = kDefaultLimits) {
  std::vector<ReproductionResult> out;
  for (const auto& item : reproduction_items(limits)) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = item.run();
    } catch (const std::exception& e) {
      c = Check{"item " + item.id, false, std::string("error: ") + e.what()};
    }
    out.push_back({item.id, std::move(c), detail::seconds_since(t0)});
  }
  return out;
}

}  // namespace brieskorn
