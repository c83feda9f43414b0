#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "twobridge/bigint.hpp"

namespace twobridge {

/**
 * Exact rational number over arbitrary-precision integers.
 *
 * Always stored in lowest terms with a positive denominator, so structural
 * equality is numeric equality and zero is uniquely 0/1.
 */
class Rational {
 public:
  Rational() = default;
  Rational(const BigInt& n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n) {}      // NOLINT(google-explicit-constructor)
  /// Throws DomainError when d == 0.
  Rational(const BigInt& n, const BigInt& d);

  /// Parses "p", "p/q" (whitespace not allowed); throws ParseError.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;
  /// Throws DomainError for zero.
  Rational reciprocal() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace twobridge
