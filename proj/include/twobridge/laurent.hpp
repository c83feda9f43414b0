#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "twobridge/bigint.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

/// Integer Laurent polynomial, exponent -> coefficient, zero coefficients never stored.
class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;

  LaurentPolynomial() = default;
  LaurentPolynomial(std::initializer_list<std::pair<const Exponent, BigInt>> terms);
  static LaurentPolynomial constant(const BigInt& c);
  static LaurentPolynomial monomial(const BigInt& c, Exponent e);
  /// c0 + c1 t + c2 t^2 + ...
  static LaurentPolynomial from_ascending(std::initializer_list<long long> coefficients);

  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  BigInt coefficient(Exponent e) const;
  bool is_zero() const { return terms_.empty(); }
  Exponent min_exponent() const;  // requires !is_zero()
  Exponent max_exponent() const;

  /// coefficient(k) == coefficient(-k) for all k.
  bool is_symmetric() const;

  BigInt value_at(const BigInt& t) const;  // throws DomainError at t = 0 with negative exponents
  Rational value_at(const Rational& t) const;

  LaurentPolynomial shifted(Exponent by) const;  // multiply by t^by

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const BigInt& c, const LaurentPolynomial& p);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// e.g. "-t^-1+3-t"; "0" for the zero polynomial.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str(); }

 private:
  void add_term(Exponent e, const BigInt& c);

  std::map<Exponent, BigInt> terms_;
};

}  // namespace twobridge
