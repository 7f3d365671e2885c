#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "brieskorn.hpp"
#include "test_util.hpp"

using namespace brieskorn;
using testutil::q;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("brieskorn_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Enumerate, Examples) {
  const auto five = enumerate_sphere_tuples(5);
  EXPECT_NE(std::find(five.begin(), five.end(), ExponentTuple::make({2, 3, 4, 5})), five.end());
  EXPECT_TRUE(enumerate_sphere_tuples(2).empty());
  const auto twelve = enumerate_sphere_tuples(12);
  EXPECT_EQ(twelve.size(), 305u);
  EXPECT_TRUE(std::is_sorted(twelve.begin(), twelve.end()));
  EXPECT_EQ(enumerate_sphere_tuples(20).size(), 2830u);
  for (const auto& a : twelve) {
    EXPECT_EQ(a, a.canonical());
    EXPECT_TRUE(is_sphere(evaluate_criterion(a).kind));
  }
}

TEST(Enumerate, Preconditions) {
  EXPECT_THROW(enumerate_sphere_tuples(1), InvalidInput);
  EXPECT_THROW(enumerate_sphere_tuples(10, 3), InvalidInput);
  Limits tight;
  tight.search_budget = 100;
  EXPECT_THROW(enumerate_sphere_tuples(12, 4, tight), CapacityError);
  EXPECT_EQ(sphere_search_space(12, 4), 1001);
}

TEST(Enumerate, EverySphereTupleHasPositiveMeanEuler) {
  for (const auto& a : enumerate_sphere_tuples(20)) {
    const auto r = mean_euler(a);
    ASSERT_TRUE(r.defined()) << a;
    ASSERT_GT(*r.value, BigRational(0)) << a;
  }
}

TEST(Certify, SelfPair) {
  const std::vector<ExponentTuple> in{ExponentTuple::make({4, 5, 9, 19})};
  const auto certs = certify_non_brieskorn_pairs(in);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_EQ(certs[0].chi_sum, q(-507, 2642));
  EXPECT_EQ(certs[0].dimension, 5);
  EXPECT_FALSE(certs[0].boundary);
  EXPECT_EQ(certs[0].conclusion, kNonBrieskornConclusion);
}

TEST(Certify, MixedPair) {
  const std::vector<ExponentTuple> in{ExponentTuple::make({5, 6, 11, 23}),
                                      ExponentTuple::make({19, 9, 5, 4})};
  const auto certs = certify_non_brieskorn_pairs(in);
  ASSERT_EQ(certs.size(), 3u);
  bool mixed = false;
  for (const auto& c : certs) {
    if (c.tuple_a != c.tuple_b) {
      mixed = true;
      EXPECT_EQ(c.chi_sum, q(407, 2642) + q(613, 7574) - q(1, 2));
      EXPECT_LT(c.tuple_a, c.tuple_b);
    }
  }
  EXPECT_TRUE(mixed);
}

TEST(Certify, LargeValuesGiveNoCertificate) {
  // (2,3,4,5) has chi_m = 41/34 > 1/4
  const std::vector<ExponentTuple> in{ExponentTuple::make({2, 3, 4, 5})};
  EXPECT_TRUE(certify_non_brieskorn_pairs(in).empty());
}

TEST(Certify, Preconditions) {
  const std::vector<ExponentTuple> not_sphere{ExponentTuple::make({2, 2, 2, 2})};
  EXPECT_THROW(certify_non_brieskorn_pairs(not_sphere), PreconditionError);
  const std::vector<ExponentTuple> wrong_length{ExponentTuple::make({2, 2, 2, 3, 5})};
  EXPECT_THROW(certify_non_brieskorn_pairs(wrong_length), PreconditionError);
}

TEST(Certify, SoundAndCompleteAgainstQuadraticRescan) {
  for (std::uint64_t max = 2; max <= 12; ++max) {
    const auto tuples = enumerate_sphere_tuples(max);
    const auto certs = certify_non_brieskorn_pairs(tuples);
    for (const auto& c : certs) {
      EXPECT_EQ(c.chi_sum, c.chi_a + c.chi_b - q(1, 2));
      EXPECT_LE(c.chi_sum, BigRational(0));
      EXPECT_EQ(c.boundary, c.chi_sum == BigRational(0));
    }
    std::vector<BigRational> chi;
    for (const auto& a : tuples) chi.push_back(*mean_euler(a).value);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t j = i; j < tuples.size(); ++j)
        if (chi[i] + chi[j] - q(1, 2) <= BigRational(0)) ++expected;
    EXPECT_EQ(certs.size(), expected) << "max " << max;
  }
  EXPECT_EQ(certify_non_brieskorn_pairs(enumerate_sphere_tuples(12)).size(), 777u);
}

TEST(Certify, DistinctnessForSigmaFamily) {
  std::vector<ExponentTuple> in;
  for (int m : {4, 5, 7, 8}) in.push_back(sigma_m_tuple(m));
  std::vector<NonBrieskornCertificate> self;
  for (const auto& c : certify_non_brieskorn_pairs(in)) {
    if (c.tuple_a == c.tuple_b) self.push_back(c);
  }
  ASSERT_EQ(self.size(), 4u);
  const auto classes = distinctness_classes(self);
  EXPECT_EQ(classes.size(), 4u);
  for (const auto& cls : classes) EXPECT_FALSE(cls.inconclusive);
}

TEST(Certify, ClassesMergeDuplicatesAndFlagCollisions) {
  const auto one = certify_non_brieskorn_pairs(
      std::vector<ExponentTuple>{ExponentTuple::make({4, 5, 9, 19})});
  const std::vector<NonBrieskornCertificate> twice{one[0], one[0]};
  const auto dup = distinctness_classes(twice);
  ASSERT_EQ(dup.size(), 1u);
  EXPECT_FALSE(dup[0].inconclusive);
  EXPECT_EQ(dup[0].members.size(), 2u);

  NonBrieskornCertificate other = one[0];
  other.tuple_b = ExponentTuple::make({5, 6, 11, 23});
  const std::vector<NonBrieskornCertificate> clash{one[0], other};
  const auto cls = distinctness_classes(clash);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_TRUE(cls[0].inconclusive);
}

TEST(Persistence, RoundTrip) {
  const auto certs = certify_non_brieskorn_pairs(enumerate_sphere_tuples(10));
  ASSERT_FALSE(certs.empty());
  const std::string path = temp_path("roundtrip.jsonl");
  persist(certs, path);
  EXPECT_EQ(load(path), certs);
  std::remove(path.c_str());
}

TEST(Persistence, DeterministicBytes) {
  const std::string p1 = temp_path("det1.jsonl"), p2 = temp_path("det2.jsonl");
  persist(certify_non_brieskorn_pairs(enumerate_sphere_tuples(11)), p1);
  persist(certify_non_brieskorn_pairs(enumerate_sphere_tuples(11)), p2);
  EXPECT_EQ(slurp(p1), slurp(p2));
  EXPECT_FALSE(slurp(p1).empty());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST(Persistence, NumbersAreStrings) {
  const auto certs = certify_non_brieskorn_pairs(
      std::vector<ExponentTuple>{ExponentTuple::make({4, 5, 9, 19})});
  const auto j = certificate_to_json(certs[0]);
  EXPECT_TRUE(j.at("chi_sum").at("num").is_string());
  EXPECT_EQ(j.at("chi_sum").at("num").get<std::string>(), "-507");
  EXPECT_TRUE(j.at("tuple_a").at(0).is_string());
}

TEST(Persistence, MalformedLineCitesLineNumber) {
  const auto certs = certify_non_brieskorn_pairs(enumerate_sphere_tuples(9));
  ASSERT_GE(certs.size(), 2u);
  const std::string path = temp_path("bad.jsonl");
  {
    std::ofstream out(path);
    out << certificate_to_json(certs[0]).dump() << "\n";
    out << certificate_to_json(certs[1]).dump() << "\n";
    out << "{\"tuple_a\": [\n";
  }
  try {
    load(path);
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
  std::remove(path.c_str());
}

TEST(Persistence, RejectsInconsistentCertificate) {
  const auto certs = certify_non_brieskorn_pairs(
      std::vector<ExponentTuple>{ExponentTuple::make({4, 5, 9, 19})});
  auto j = certificate_to_json(certs[0]);
  j["chi_sum"] = json_io::encode(q(-1, 2));
  EXPECT_THROW(certificate_from_json(j), InvalidInput);
}

TEST(Persistence, EmptyFileAndMissingFile) {
  const std::string path = temp_path("empty.jsonl");
  { std::ofstream out(path); }
  EXPECT_TRUE(load(path).empty());
  std::remove(path.c_str());
  EXPECT_THROW(load(temp_path("does_not_exist.jsonl")), IoError);
}
