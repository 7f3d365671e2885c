#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"

namespace brieskorn {

/// Exact rational number, always stored reduced with a positive denominator,
/// so equal values are structurally equal.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT: implicit by intent
  BigRational(long long num) : num_(num), den_(1) {}          // NOLINT
  BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidInput("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }
  bool is_integer() const { return den_ == 1; }

  BigRational operator-() const { return from_reduced(-num_, den_); }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.num_ == 0) throw InvalidInput("rational division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
  BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
  BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
  BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  /// Accepts "p/q" or "p".
  static BigRational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
    return {parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1))};
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.str();
  }

 private:
  static BigRational from_reduced(BigInt num, BigInt den) {
    BigRational q;
    q.num_ = std::move(num);
    q.den_ = std::move(den);
    return q;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const BigInt g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace brieskorn
