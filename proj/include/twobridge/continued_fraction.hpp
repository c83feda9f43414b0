#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

/// Continued fraction [c, b1, ..., bn] with value c + 1/(b1 + 1/(b2 + ... + 1/bn)).
class ContinuedFraction {
 public:
  /// Throws DomainError on an empty term list.
  explicit ContinuedFraction(std::vector<BigInt> terms);
  ContinuedFraction(std::initializer_list<long long> terms);

  const BigInt& integer_part() const { return terms_.front(); }
  std::span<const BigInt> tail() const { return std::span<const BigInt>(terms_).subspan(1); }
  const std::vector<BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool all_even() const;
  std::string str() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
  friend std::strong_ordering operator<=>(const ContinuedFraction& a, const ContinuedFraction& b);
  friend std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
    return os << cf.str();
  }

 private:
  std::vector<BigInt> terms_;
};

/// Exact value; throws EvaluationError when a tail evaluates to 0 under a reciprocal.
Rational cf_eval(const ContinuedFraction& cf);

/// Simple continued fraction [0, b1, ..., bn] of r in (0,1): bi > 0 and bn >= 2.
/// Throws DomainError for r outside (0,1).
ContinuedFraction simple_cf(const Rational& r);

}  // namespace twobridge
