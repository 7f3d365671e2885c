#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/limits.hpp"
#include "brieskorn/tuple.hpp"

namespace brieskorn {

/// Graph on the indices of a tuple with an edge wherever gcd(a_k, a_l) >= 2.
/// Equal labels are still distinct vertices.
struct DivisorGraph {
  std::vector<BigInt> labels;
  std::vector<std::vector<std::size_t>> adjacency;
  /// Edges (k, l) with k < l, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Connected components as sorted index sets, ordered by smallest index.
  std::vector<std::vector<std::size_t>> components;
  /// Singleton components.
  std::vector<std::size_t> isolated;
  /// The component holding the even labels (all evens share the factor 2);
  /// empty when every label is odd.
  std::vector<std::size_t> even_component;

  bool has_edge(std::size_t k, std::size_t l) const {
    const auto& adj = adjacency.at(k);
    return std::find(adj.begin(), adj.end(), l) != adj.end();
  }
};

inline DivisorGraph build_graph(const ExponentTuple& a) {
  DivisorGraph g;
  const std::size_t L = a.size();
  g.labels.assign(a.entries().begin(), a.entries().end());
  g.adjacency.resize(L);
  for (std::size_t k = 0; k < L; ++k) {
    for (std::size_t l = k + 1; l < L; ++l) {
      if (gcd(a[k], a[l]) >= 2) {
        g.edges.emplace_back(k, l);
        g.adjacency[k].push_back(l);
        g.adjacency[l].push_back(k);
      }
    }
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());

  std::vector<bool> seen(L, false);
  for (std::size_t start = 0; start < L; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> frontier{start};
    seen[start] = true;
    while (!frontier.empty()) {
      const std::size_t v = frontier.back();
      frontier.pop_back();
      comp.push_back(v);
      for (std::size_t w : g.adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.size() == 1) g.isolated.push_back(comp.front());
    const bool has_even =
        std::any_of(comp.begin(), comp.end(), [&](std::size_t v) { return a[v] % 2 == 0; });
    if (has_even) g.even_component = comp;
    g.components.push_back(std::move(comp));
  }
  return g;
}

enum class SphereKind {
  SphereByI,
  SphereByII,
  NotSphere,
  HomologySphereConditionsHold,
  HomologySphereConditionsFail,
};

inline std::string to_string(SphereKind k) {
  switch (k) {
    case SphereKind::SphereByI: return "SPHERE_BY_I";
    case SphereKind::SphereByII: return "SPHERE_BY_II";
    case SphereKind::NotSphere: return "NOT_SPHERE";
    case SphereKind::HomologySphereConditionsHold: return "HOMOLOGY_SPHERE_CONDITIONS_HOLD";
    case SphereKind::HomologySphereConditionsFail: return "HOMOLOGY_SPHERE_CONDITIONS_FAIL";
  }
  return "UNKNOWN";
}

inline bool is_sphere(SphereKind k) {
  return k == SphereKind::SphereByI || k == SphereKind::SphereByII;
}

struct SphereVerdict {
  SphereKind kind = SphereKind::NotSphere;
  std::vector<std::size_t> isolated_points;
  std::size_t even_component_size = 0;
  /// gcd of every pair in the even component is exactly 2 (vacuous below
  /// two vertices).
  bool even_component_pairwise_gcd2 = false;
  bool condition_i = false;
  bool condition_ii = false;
};

/// Brieskorn's graph criterion. For length >= 4 the verdict is a
/// homeomorphism statement; for length 3 only the integral homology sphere
/// conditions are reported.
inline SphereVerdict evaluate_criterion(const ExponentTuple& a) {
  if (a.size() < 3) {
    throw UnsupportedLength("sphere criterion needs at least 3 exponents, got " +
                            std::to_string(a.size()));
  }
  const DivisorGraph g = build_graph(a);
  SphereVerdict v;
  v.isolated_points = g.isolated;
  v.even_component_size = g.even_component.size();
  v.even_component_pairwise_gcd2 = true;
  for (std::size_t i = 0; i < g.even_component.size(); ++i) {
    for (std::size_t j = i + 1; j < g.even_component.size(); ++j) {
      if (gcd(a[g.even_component[i]], a[g.even_component[j]]) != 2) {
        v.even_component_pairwise_gcd2 = false;
      }
    }
  }
  v.condition_i = v.isolated_points.size() >= 2;
  v.condition_ii = !v.isolated_points.empty() && v.even_component_size > 1 &&
                   v.even_component_size % 2 == 1 && v.even_component_pairwise_gcd2;

  if (a.size() == 3) {
    v.kind = (v.condition_i || v.condition_ii) ? SphereKind::HomologySphereConditionsHold
                                               : SphereKind::HomologySphereConditionsFail;
  } else if (v.condition_ii) {
    v.kind = SphereKind::SphereByII;
  } else if (v.condition_i) {
    v.kind = SphereKind::SphereByI;
  } else {
    v.kind = SphereKind::NotSphere;
  }
  return v;
}

inline void check_subset_cap(const ExponentTuple& a, const Limits& limits) {
  if (a.size() > limits.subset_cap) {
    throw CapacityError("tuple length " + std::to_string(a.size()) +
                        " exceeds the subset enumeration cap of " +
                        std::to_string(limits.subset_cap) + " (raise --cap-subsets)");
  }
}

/// Layer k of the homology rank sum: (-1)^(L-k) times the sum over all
/// k-subsets I of prod(a_I) / lcm(a_I). Index k runs 0..L.
inline std::vector<BigInt> kappa_layers(const ExponentTuple& a,
                                        const Limits& limits = kDefaultLimits) {
  check_subset_cap(a, limits);
  const std::size_t L = a.size();
  std::vector<BigInt> layers(L + 1, BigInt(0));

  // depth-first over subsets carrying the running product and lcm
  struct Frame {
    std::size_t next;
    std::size_t size;
    BigInt prod;
    BigInt l;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, BigInt(1), BigInt(1)});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    BigInt q, r;
    boost::multiprecision::divide_qr(fr.prod, fr.l, q, r);
    if (r != 0) {
      throw InternalError("product/lcm quotient is not integral for " + a.str());
    }
    layers[fr.size] += q;
    for (std::size_t j = fr.next; j < L; ++j) {
      stack.push_back({j + 1, fr.size + 1, fr.prod * a[j], brieskorn::lcm(fr.l, a[j])});
    }
  }
  for (std::size_t k = 0; k <= L; ++k) {
    if ((L - k) % 2 == 1) layers[k] = -layers[k];
  }
  return layers;
}

/// Rank of the middle homology: the alternating product/lcm sum over all
/// subsets of exponents.
inline BigInt kappa(const ExponentTuple& a, const Limits& limits = kDefaultLimits) {
  const std::vector<BigInt> layers = kappa_layers(a, limits);
  const std::size_t L = a.size();
  const int s = (L % 2 == 0) ? 1 : -1;  // (-1)^L, also (-1)^(L-2)
  BigInt pair_gcds = 0;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) pair_gcds += gcd(a[i], a[j]);
  }
  // leading terms of the expansion: 1 - L + sum of pairwise gcds, times (-1)^L
  if (layers[0] != s || layers[1] != -s * static_cast<long long>(L) ||
      layers[2] != s * pair_gcds) {
    throw InternalError("homology rank expansion mismatch in the first layers for " + a.str());
  }
  BigInt total = 0;
  for (const auto& layer : layers) total += layer;
  return total;
}

/// Euler characteristic of the rational S^1-equivariant homology:
/// n + (-1)^(n-1) * kappa with n = L - 1.
inline BigInt chi_s1(const ExponentTuple& a, const Limits& limits = kDefaultLimits) {
  const BigInt k = kappa(a, limits);
  const BigInt n = static_cast<long long>(a.n());
  return a.n() % 2 == 1 ? BigInt(n + k) : BigInt(n - k);
}

struct Subtuple {
  std::vector<std::size_t> indices;
  ExponentTuple tuple;
};

/// Every subtuple with at least min_length entries, by increasing length and
/// then index-lexicographically.
inline std::vector<Subtuple> invariant_subtuples(const ExponentTuple& a, std::size_t min_length = 2,
                                                 const Limits& limits = kDefaultLimits) {
  if (min_length < 2 || min_length > a.size()) {
    throw InvalidInput("subtuple minimum length must lie in [2, " + std::to_string(a.size()) +
                       "], got " + std::to_string(min_length));
  }
  check_subset_cap(a, limits);
  std::vector<Subtuple> out;
  for_each_index_subset(a.size(), min_length, [&](std::span<const std::size_t> idx) {
    out.push_back({std::vector<std::size_t>(idx.begin(), idx.end()), a.subtuple(idx)});
  });
  return out;
}

struct SubtupleCheck {
  std::vector<std::size_t> indices;
  ExponentTuple tuple;
  BigInt kappa;
  BigInt chi_s1;
};

struct SubtuplePositivityReport {
  ExponentTuple tuple;
  std::vector<SubtupleCheck> checks;
  /// Each entry describes a subtuple that breaks the positivity statement.
  std::vector<std::string> falsifications;

  bool holds() const { return falsifications.empty(); }
};

/// For a 5-dimensional sphere tuple: every 3-entry subtuple has kappa = 0 and
/// every subtuple of length >= 2 has positive equivariant Euler characteristic.
inline SubtuplePositivityReport check_subtuple_positivity(const ExponentTuple& a,
                                                          const Limits& limits = kDefaultLimits) {
  if (a.size() != 4) {
    throw PreconditionError("subtuple positivity check needs a 4-tuple, got length " +
                            std::to_string(a.size()));
  }
  if (!is_sphere(evaluate_criterion(a).kind)) {
    throw PreconditionError(a.str() + " does not satisfy the sphere criterion");
  }
  SubtuplePositivityReport report{a, {}, {}};
  for (auto& sub : invariant_subtuples(a, 2, limits)) {
    SubtupleCheck c{sub.indices, sub.tuple, kappa(sub.tuple, limits), chi_s1(sub.tuple, limits)};
    if (c.tuple.size() == 3 && c.kappa != 0) {
      report.falsifications.push_back("kappa" + c.tuple.str() + " = " + c.kappa.str() + " != 0");
    }
    if (c.chi_s1 <= 0) {
      report.falsifications.push_back("chi_S1" + c.tuple.str() + " = " + c.chi_s1.str() +
                                      " is not positive");
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace brieskorn
