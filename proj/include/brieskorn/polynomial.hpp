#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

/// Univariate polynomial with integer coefficients in ascending degree
/// order. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  /// The monomial c * x^k.
  static IntPolynomial monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = c;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const {
    if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> r(std::max(p.coeffs_.size(), q.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) r[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) r[i] += q.coeffs_[i];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& p) {
    std::vector<BigInt> r = p.coeffs_;
    for (auto& c : r) c = -c;
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    return p + (-q);
  }
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> r(p.coeffs_.size() + q.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        r[i + j] += p.coeffs_[i] * q.coeffs_[j];
      }
    }
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> r(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) r[k - 1] = coeffs_[k] * k;
    return IntPolynomial(std::move(r));
  }

  /// Horner evaluation.
  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  BigRational evaluate(const BigRational& x) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
  }

  /// Human-readable form in descending degree, variable name configurable.
  std::string str(const std::string& var = "m") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      const BigInt mag = brieskorn::abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || k == 0) out += mag.str();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Both sides of the coefficient-dominance comparison on |x| = radius.
struct DominanceWitness {
  BigInt leading_term;  ///< |lead| * radius^deg
  BigInt lower_terms;   ///< sum over i < deg of |c_i| * radius^i
  bool dominates = false;
};

inline DominanceWitness dominance_witness(const IntPolynomial& p, const BigInt& radius) {
  if (p.is_zero()) throw InvalidInput("dominance check of the zero polynomial");
  if (radius < 1) throw InvalidInput("dominance radius must be >= 1");
  DominanceWitness w;
  BigInt power = 1;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    w.lower_terms += brieskorn::abs(c[i]) * power;
    power *= radius;
  }
  w.leading_term = brieskorn::abs(c.back()) * power;
  w.dominates = w.leading_term > w.lower_terms;
  return w;
}

/// True when the leading term strictly dominates all lower terms on the
/// circle |x| = radius; then every complex root lies inside that disc.
inline bool dominance_check(const IntPolynomial& p, const BigInt& radius) {
  return dominance_witness(p, radius).dominates;
}

}  // namespace brieskorn
