#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "brieskorn.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace brieskorn;
using testutil::tuple_of;

TEST(MakeTuple, ValidatesEntries) {
  const ExponentTuple a = ExponentTuple::make({4, 5, 9, 19});
  EXPECT_EQ(a.n(), 3u);
  EXPECT_EQ(a.dimension(), 5u);
  EXPECT_EQ(a.lcm(), 3420);
  try {
    ExponentTuple::make({2, 1, 3});
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
  }
  EXPECT_THROW(ExponentTuple::make({7}), InvalidInput);
  const ExponentTuple f = make_tuple(
      {BigInt(17), BigInt(257), BigInt(65537), BigInt("4294967297")});
  EXPECT_EQ(f.size(), 4u);
}

TEST(MakeTuple, CanonicalSortsButKeepsOriginal) {
  const ExponentTuple a = ExponentTuple::make({19, 4, 9, 5});
  EXPECT_EQ(a.canonical(), ExponentTuple::make({4, 5, 9, 19}));
  EXPECT_EQ(a.str(), "(19,4,9,5)");
}

TEST(Graph, CoprimeTupleHasNoEdges) {
  const DivisorGraph g = build_graph(ExponentTuple::make({4, 5, 9, 19}));
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.isolated, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(g.even_component, (std::vector<std::size_t>{0}));
}

TEST(Graph, EqualLabelsAreDistinctVertices) {
  const DivisorGraph g = build_graph(ExponentTuple::make({2, 2, 2, 2}));
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_EQ(g.components.size(), 1u);
  EXPECT_EQ(g.even_component.size(), 4u);
  EXPECT_TRUE(g.isolated.empty());
}

TEST(Graph, EvenEntriesComplete) {
  const DivisorGraph g = build_graph(ExponentTuple::make({2, 4, 6, 12}));
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_TRUE(g.isolated.empty());
}

TEST(Graph, OddLabelCanJoinEvenComponent) {
  // 3 links to 6 via the factor 3
  const DivisorGraph g = build_graph(ExponentTuple::make({2, 6, 3, 5}));
  EXPECT_EQ(g.even_component, (std::vector<std::size_t>{0, 1, 2}));
  const SphereVerdict v = evaluate_criterion(ExponentTuple::make({2, 6, 3, 5}));
  EXPECT_FALSE(v.even_component_pairwise_gcd2);
  EXPECT_EQ(v.kind, SphereKind::NotSphere);
}

TEST(Graph, ComponentsPartitionVertices) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto raw = oracle::random_tuple(rng, 2, 8, 40);
    const DivisorGraph g = build_graph(tuple_of(raw));
    std::vector<std::size_t> all;
    for (const auto& c : g.components) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), raw.size());
    for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(all[k], k);
    for (auto [k, l] : g.edges) {
      EXPECT_LT(k, l);
      EXPECT_TRUE(g.has_edge(l, k));
    }
    for (std::size_t v : g.even_component) {
      if (raw[v] % 2 == 0) continue;
      // an odd member is only possible through a shared odd factor
      EXPECT_FALSE(g.adjacency[v].empty());
    }
  }
}

TEST(Criterion, Examples) {
  const SphereVerdict v = evaluate_criterion(ExponentTuple::make({4, 5, 9, 19}));
  EXPECT_EQ(v.kind, SphereKind::SphereByI);
  EXPECT_NE(std::find(v.isolated_points.begin(), v.isolated_points.end(), 1u),
            v.isolated_points.end());
  EXPECT_NE(std::find(v.isolated_points.begin(), v.isolated_points.end(), 2u),
            v.isolated_points.end());

  const SphereVerdict w = evaluate_criterion(ExponentTuple::make({2, 2, 2, 2}));
  EXPECT_EQ(w.kind, SphereKind::NotSphere);
  EXPECT_TRUE(w.isolated_points.empty());
  EXPECT_EQ(w.even_component_size, 4u);

  EXPECT_EQ(evaluate_criterion(ExponentTuple::make({2, 3, 5})).kind,
            SphereKind::HomologySphereConditionsHold);
  EXPECT_EQ(evaluate_criterion(ExponentTuple::make({2, 2, 4})).kind,
            SphereKind::HomologySphereConditionsFail);

  const SphereVerdict ii = evaluate_criterion(ExponentTuple::make({2, 2, 2, 3, 5}));
  EXPECT_EQ(ii.kind, SphereKind::SphereByII);
  EXPECT_GE(ii.isolated_points.size(), 1u);
  EXPECT_EQ(ii.even_component_size, 3u);
  EXPECT_TRUE(ii.even_component_pairwise_gcd2);
}

TEST(Criterion, ConditionTwoNeedsGcdExactlyTwo) {
  // evens {2, 4, 6}: gcd(2,4) = 2 but gcd(4,... ) fine, gcd(2,6) = 2, gcd(4,6) = 2 -> holds
  EXPECT_EQ(evaluate_criterion(ExponentTuple::make({2, 4, 6, 5})).kind, SphereKind::SphereByII);
  // evens {4, 8, 6}: gcd(4, 8) = 4
  EXPECT_EQ(evaluate_criterion(ExponentTuple::make({4, 8, 6, 5})).kind, SphereKind::NotSphere);
  // one isolated point, even component of size 2
  EXPECT_EQ(evaluate_criterion(ExponentTuple::make({2, 2, 3, 9})).kind, SphereKind::NotSphere);
}

TEST(Criterion, RejectsPairs) {
  EXPECT_THROW(evaluate_criterion(ExponentTuple::make({2, 3})), UnsupportedLength);
}

TEST(Criterion, VerdictInvariants) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const SphereVerdict v = evaluate_criterion(tuple_of(oracle::random_tuple(rng, 4, 7, 30)));
    if (v.kind == SphereKind::SphereByI) EXPECT_GE(v.isolated_points.size(), 2u);
    if (v.kind == SphereKind::SphereByII) {
      EXPECT_GE(v.isolated_points.size(), 1u);
      EXPECT_EQ(v.even_component_size % 2, 1u);
      EXPECT_GT(v.even_component_size, 1u);
      EXPECT_TRUE(v.even_component_pairwise_gcd2);
    }
    EXPECT_NE(v.kind, SphereKind::HomologySphereConditionsHold);
    EXPECT_NE(v.kind, SphereKind::HomologySphereConditionsFail);
  }
}

TEST(Criterion, PermutationInvariant) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    auto raw = oracle::random_tuple(rng, 3, 7, 24);
    const SphereKind k = evaluate_criterion(tuple_of(raw)).kind;
    std::shuffle(raw.begin(), raw.end(), rng);
    EXPECT_EQ(evaluate_criterion(tuple_of(raw)).kind, k);
  }
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa(ExponentTuple::make({2, 2, 2})), 0);
  EXPECT_EQ(kappa(ExponentTuple::make({2, 3, 5, 7})), 0);
  EXPECT_EQ(kappa(ExponentTuple::make({2, 2, 2, 2})), 1);
  EXPECT_EQ(kappa(ExponentTuple::make({2, 2})), 1);
}

TEST(Kappa, LayersOfTwoTwoTwoTwo) {
  // 1 - 4 + 12 - 16 + 8
  const auto layers = kappa_layers(ExponentTuple::make({2, 2, 2, 2}));
  EXPECT_EQ(layers, (std::vector<BigInt>{1, -4, 12, -16, 8}));
}

TEST(Kappa, PairClosedForm) {
  for (int p = 2; p <= 50; ++p) {
    for (int r = 2; r <= 50; ++r) {
      EXPECT_EQ(kappa(ExponentTuple::make({p, r})), gcd(p, r) - 1) << p << "," << r;
    }
  }
}

TEST(Kappa, MatchesBitmaskOracle) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    const auto raw = oracle::random_tuple(rng, 2, 7, 36);
    EXPECT_EQ(kappa(tuple_of(raw)), oracle::kappa(raw));
  }
}

TEST(Kappa, PairLayerIsSignedGcdSum) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const auto raw = oracle::random_tuple(rng, 2, 7, 60);
    const auto layers = kappa_layers(tuple_of(raw));
    long long gsum = 0;
    for (std::size_t a = 0; a < raw.size(); ++a)
      for (std::size_t b = a + 1; b < raw.size(); ++b) gsum += std::gcd(raw[a], raw[b]);
    const long long sign = raw.size() % 2 == 0 ? 1 : -1;
    EXPECT_EQ(layers[2], sign * gsum);
  }
}

TEST(Kappa, CapacityCap) {
  Limits limits;
  limits.subset_cap = 3;
  EXPECT_THROW(kappa(ExponentTuple::make({2, 3, 5, 7}), limits), CapacityError);
}

TEST(Kappa, SphereFourTuplesAndTheirTriplesHaveZeroRank) {
  for (const auto& a : enumerate_sphere_tuples(16)) {
    EXPECT_EQ(kappa(a), 0) << a;
    for (const auto& sub : invariant_subtuples(a, 3)) EXPECT_EQ(kappa(sub.tuple), 0) << sub.tuple;
  }
}

TEST(Kappa, CoprimeSubtuplesAreRationalHomologySpheres) {
  std::mt19937_64 rng(15);
  int tested = 0;
  while (tested < 200) {
    const auto raw = oracle::random_tuple(rng, 3, 6, 60);
    const ExponentTuple a = tuple_of(raw);
    if (!is_pairwise_coprime(a)) continue;
    ++tested;
    for (const auto& sub : invariant_subtuples(a, 3)) EXPECT_EQ(kappa(sub.tuple), 0) << sub.tuple;
  }
}

TEST(ChiS1, Examples) {
  EXPECT_EQ(chi_s1(ExponentTuple::make({4, 5, 9, 19})), 3);
  EXPECT_EQ(chi_s1(ExponentTuple::make({2, 2})), 2);
  EXPECT_EQ(chi_s1(ExponentTuple::make({2, 2, 2, 2})), 4);
  EXPECT_EQ(chi_s1(ExponentTuple::make({6, 10})), 2);  // gcd(6, 10)
}

TEST(Subtuples, CountsAndOrder) {
  const ExponentTuple a = ExponentTuple::make({4, 5, 9, 19});
  const auto subs = invariant_subtuples(a, 3);
  ASSERT_EQ(subs.size(), 5u);
  EXPECT_EQ(subs[0].indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(subs[3].indices, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(subs[4].tuple, a);
  EXPECT_EQ(invariant_subtuples(ExponentTuple::make({2, 3, 5})).size(), 4u);
  const auto self = invariant_subtuples(a, 4);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].tuple, a);
  EXPECT_THROW(invariant_subtuples(a, 1), InvalidInput);
  EXPECT_THROW(invariant_subtuples(a, 5), InvalidInput);
}

TEST(SubtuplePositivity, SphereExamples) {
  const auto rep = check_subtuple_positivity(ExponentTuple::make({4, 5, 9, 19}));
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.checks.size(), 11u);
  for (const auto& c : rep.checks) {
    if (c.tuple.size() == 3) EXPECT_EQ(c.kappa, 0);
    EXPECT_GT(c.chi_s1, 0);
  }
  EXPECT_TRUE(check_subtuple_positivity(ExponentTuple::make({2, 3, 5, 7})).holds());
}

TEST(SubtuplePositivity, Preconditions) {
  EXPECT_THROW(check_subtuple_positivity(ExponentTuple::make({2, 2, 2, 3, 5})),
               PreconditionError);
  EXPECT_THROW(check_subtuple_positivity(ExponentTuple::make({2, 2, 2, 2})), PreconditionError);
}
