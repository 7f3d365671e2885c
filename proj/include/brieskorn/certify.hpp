#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/json_io.hpp"
#include "brieskorn/limits.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/reeb.hpp"
#include "brieskorn/topology.hpp"
#include "brieskorn/tuple.hpp"

namespace brieskorn {

inline constexpr const char* kNonBrieskornConclusion =
    "connected sum not contactomorphic to any Brieskorn contact structure";

/// Every 5-dimensional Brieskorn sphere has chi_m > 0, so a connected sum of
/// two of them with chi_m <= 0 is not Brieskorn.
struct NonBrieskornCertificate {
  ExponentTuple tuple_a;
  ExponentTuple tuple_b;
  BigRational chi_a;
  BigRational chi_b;
  BigRational chi_sum;
  int dimension = 5;
  /// chi_sum == 0 exactly.
  bool boundary = false;
  std::string conclusion = kNonBrieskornConclusion;

  friend bool operator==(const NonBrieskornCertificate&, const NonBrieskornCertificate&) = default;
};

/// Number of nondecreasing tuples of the given length over [2, max_exponent].
inline BigInt sphere_search_space(const BigInt& max_exponent, std::size_t length) {
  // C(values + length - 1, length) with values = max_exponent - 1
  const BigInt values = max_exponent - 1;
  BigInt c = 1;
  for (std::size_t i = 1; i <= length; ++i) c = c * (values + i - 1) / i;
  return c;
}

/// Canonical (sorted) tuples with entries in [2, max_exponent] satisfying
/// the sphere criterion, in lexicographic order.
inline std::vector<ExponentTuple> enumerate_sphere_tuples(std::uint64_t max_exponent,
                                                          std::size_t length = 4,
                                                          const Limits& limits = kDefaultLimits) {
  if (max_exponent < 2) {
    throw InvalidInput("max exponent must be >= 2, got " + std::to_string(max_exponent));
  }
  if (length < 4) {
    throw InvalidInput("sphere enumeration needs length >= 4, got " + std::to_string(length));
  }
  const BigInt space = sphere_search_space(max_exponent, length);
  if (space > limits.search_budget) {
    throw CapacityError("search space of " + space.str() + " tuples exceeds the budget of " +
                        std::to_string(limits.search_budget));
  }
  std::vector<ExponentTuple> out;
  std::vector<std::uint64_t> cur(length, 2);
  while (true) {
    ExponentTuple a = ExponentTuple::make(std::vector<BigInt>(cur.begin(), cur.end()));
    if (is_sphere(evaluate_criterion(a).kind)) out.push_back(std::move(a));
    // next nondecreasing sequence
    std::size_t i = length;
    while (i > 0 && cur[i - 1] == max_exponent) --i;
    if (i == 0) break;
    const std::uint64_t v = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < length; ++j) cur[j] = v;
  }
  return out;
}

struct CertifiedTuple {
  ExponentTuple tuple;
  BigRational chi_m;
};

/// Canonicalizes, sorts and deduplicates, then checks every tuple is a
/// 4-entry sphere tuple with a defined mean Euler characteristic.
inline std::vector<CertifiedTuple> prepare_certification(std::span<const ExponentTuple> tuples,
                                                         const Limits& limits = kDefaultLimits) {
  std::vector<ExponentTuple> canon;
  canon.reserve(tuples.size());
  for (const auto& a : tuples) canon.push_back(a.canonical());
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  std::vector<CertifiedTuple> out;
  out.reserve(canon.size());
  for (auto& a : canon) {
    if (a.size() != 4) {
      throw PreconditionError("certificates are 5-dimensional; " + a.str() + " has length " +
                              std::to_string(a.size()));
    }
    if (!is_sphere(evaluate_criterion(a).kind)) {
      throw PreconditionError(a.str() + " does not satisfy the sphere criterion");
    }
    MeanEulerReport rep = mean_euler(a, limits);
    if (!rep.defined()) {
      throw PreconditionError("mean Euler characteristic of " + a.str() +
                              " is undefined (total index 0)");
    }
    out.push_back({std::move(a), std::move(*rep.value)});
  }
  return out;
}

/// Calls visit(cert) for every unordered pair i <= j with
/// chi_i + chi_j - 1/2 <= 0, in canonical pair order. Returns the count.
template <typename Visit>
std::uint64_t for_each_certificate(std::span<const CertifiedTuple> tuples, Visit&& visit) {
  // rank the distinct values so the pair test is an integer comparison
  std::vector<BigRational> distinct;
  distinct.reserve(tuples.size());
  for (const auto& t : tuples) distinct.push_back(t.chi_m);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto rank_of = [&](const BigRational& q) {
    return std::lower_bound(distinct.begin(), distinct.end(), q) - distinct.begin();
  };
  const BigRational half(1, 2);
  std::vector<std::ptrdiff_t> rank(tuples.size());
  std::vector<std::ptrdiff_t> limit(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    rank[i] = rank_of(tuples[i].chi_m);
    // largest rank whose value is <= 1/2 - chi_i
    limit[i] = std::upper_bound(distinct.begin(), distinct.end(), half - tuples[i].chi_m) -
               distinct.begin() - 1;
  }

  std::uint64_t count = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (limit[i] < 0) continue;
    for (std::size_t j = i; j < tuples.size(); ++j) {
      if (rank[j] > limit[i]) continue;
      const BigRational pair[] = {tuples[i].chi_m, tuples[j].chi_m};
      NonBrieskornCertificate cert{tuples[i].tuple, tuples[j].tuple, tuples[i].chi_m,
                                   tuples[j].chi_m, connected_sum_chi(pair, 3)};
      if (cert.chi_sum > BigRational(0)) {
        throw InternalError("certificate with positive sum for " + cert.tuple_a.str() + " # " +
                            cert.tuple_b.str());
      }
      cert.boundary = cert.chi_sum == BigRational(0);
      visit(std::move(cert));
      ++count;
    }
  }
  return count;
}

inline std::vector<NonBrieskornCertificate> certify_non_brieskorn_pairs(
    std::span<const ExponentTuple> tuples, const Limits& limits = kDefaultLimits) {
  const std::vector<CertifiedTuple> prepared = prepare_certification(tuples, limits);
  std::vector<NonBrieskornCertificate> out;
  for_each_certificate(std::span<const CertifiedTuple>(prepared),
                       [&](NonBrieskornCertificate&& c) { out.push_back(std::move(c)); });
  return out;
}

struct CertificateClass {
  BigRational chi_sum;
  /// Indices into the certificate sequence.
  std::vector<std::size_t> members;
  /// More than one distinct pair shares this value: chi_m cannot tell them
  /// apart.
  bool inconclusive = false;
};

/// Groups certificates by exact chi_sum, ascending. Distinct classes are
/// pairwise non-contactomorphic.
inline std::vector<CertificateClass> distinctness_classes(
    std::span<const NonBrieskornCertificate> certs) {
  std::map<BigRational, CertificateClass> by_value;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    auto [it, inserted] = by_value.try_emplace(certs[i].chi_sum);
    if (inserted) it->second.chi_sum = certs[i].chi_sum;
    auto& cls = it->second;
    for (std::size_t k : cls.members) {
      if (certs[k].tuple_a != certs[i].tuple_a || certs[k].tuple_b != certs[i].tuple_b) {
        cls.inconclusive = true;
      }
    }
    cls.members.push_back(i);
  }
  std::vector<CertificateClass> out;
  out.reserve(by_value.size());
  for (auto& [value, cls] : by_value) out.push_back(std::move(cls));
  return out;
}

// ---------------------------------------------------------------------------
// JSONL persistence
// ---------------------------------------------------------------------------

inline json_io::Json certificate_to_json(const NonBrieskornCertificate& c) {
  return json_io::Json{{"tuple_a", json_io::encode(c.tuple_a)},
                       {"tuple_b", json_io::encode(c.tuple_b)},
                       {"chi_a", json_io::encode(c.chi_a)},
                       {"chi_b", json_io::encode(c.chi_b)},
                       {"chi_sum", json_io::encode(c.chi_sum)},
                       {"dimension", c.dimension},
                       {"boundary", c.boundary},
                       {"conclusion", c.conclusion}};
}

inline NonBrieskornCertificate certificate_from_json(const json_io::Json& j) {
  if (!j.is_object()) throw InvalidInput("certificate must be a JSON object");
  NonBrieskornCertificate c{json_io::decode_tuple(j.at("tuple_a")),
                            json_io::decode_tuple(j.at("tuple_b")),
                            json_io::decode_rational(j.at("chi_a")),
                            json_io::decode_rational(j.at("chi_b")),
                            json_io::decode_rational(j.at("chi_sum"))};
  c.dimension = j.at("dimension").get<int>();
  c.boundary = j.at("boundary").get<bool>();
  c.conclusion = j.at("conclusion").get<std::string>();
  if (c.dimension != 5) throw InvalidInput("certificate dimension must be 5");
  if (c.chi_sum != c.chi_a + c.chi_b - BigRational(1, 2)) {
    throw InvalidInput("chi_sum is not chi_a + chi_b - 1/2");
  }
  if (c.chi_sum > BigRational(0)) throw InvalidInput("chi_sum is positive");
  if (c.boundary != (c.chi_sum == BigRational(0))) {
    throw InvalidInput("boundary flag does not match chi_sum");
  }
  return c;
}

/// Streams certificates to a JSONL file, one object per line.
class CertificateWriter {
 public:
  explicit CertificateWriter(const std::string& path) : path_(path), out_(path, std::ios::trunc) {
    if (!out_) throw IoError("cannot open '" + path + "' for writing");
  }

  void write(const NonBrieskornCertificate& c) {
    out_ << certificate_to_json(c).dump() << '\n';
    if (!out_) throw IoError("write to '" + path_ + "' failed");
  }

  void close() {
    out_.close();
    if (out_.fail()) throw IoError("closing '" + path_ + "' failed");
  }

 private:
  std::string path_;
  std::ofstream out_;
};

inline void persist(std::span<const NonBrieskornCertificate> certs, const std::string& path) {
  CertificateWriter w(path);
  for (const auto& c : certs) w.write(c);
  w.close();
}

/// Reads a JSONL certificate file. Blank lines are skipped; any other
/// malformed line raises an error citing its 1-based line number.
inline std::vector<NonBrieskornCertificate> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<NonBrieskornCertificate> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(certificate_from_json(json_io::Json::parse(line)));
    } catch (const std::exception& e) {
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": malformed certificate: " +
                         e.what());
    }
  }
  if (in.bad()) throw IoError("read from '" + path + "' failed");
  return out;
}

}  // namespace brieskorn
