#pragma once

#include <compare>
#include <string>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/continued_fraction.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

/// Two-bridge knot S(alpha, beta): alpha odd >= 3, 0 < beta < alpha, gcd(alpha, beta) = 1.
class SchubertForm {
 public:
  /// Throws DomainError when the pair does not describe a two-bridge knot.
  SchubertForm(BigInt alpha, BigInt beta);

  const BigInt& alpha() const { return alpha_; }
  const BigInt& beta() const { return beta_; }
  Rational fraction() const { return Rational(beta_, alpha_); }
  std::string str() const;

  friend bool operator==(const SchubertForm&, const SchubertForm&) = default;
  friend std::strong_ordering operator<=>(const SchubertForm& a, const SchubertForm& b);

 private:
  BigInt alpha_;
  BigInt beta_;
};

/// Even continued-fraction presentation C[e1, ..., e2g]: entries nonzero and even, length even.
class ConwayForm {
 public:
  /// Throws DomainError when an entry is odd or zero, or the length is odd or zero.
  explicit ConwayForm(std::vector<BigInt> entries);

  const std::vector<BigInt>& entries() const { return entries_; }
  std::size_t genus() const { return entries_.size() / 2; }
  std::string str() const;

  /// The knot whose fraction is [0, e1, ..., e2g]; beta is reduced into (0, alpha).
  SchubertForm schubert() const;

  friend bool operator==(const ConwayForm&, const ConwayForm&) = default;

 private:
  std::vector<BigInt> entries_;
};

struct CanonicalKnot {
  SchubertForm form;
  bool mirrored = false;  // form presents the mirror image of the input
};

/// Even-beta representative. Even beta is returned unchanged. Odd beta is
/// mirrored and replaced by the smallest even member of
/// {alpha - beta, (alpha - beta)^-1 mod alpha}.
CanonicalKnot canonicalize(const SchubertForm& s);

enum class Equivalence { same, mirror, distinct };
std::string to_string(Equivalence e);

/// Two-bridge classification: same iff beta2 = beta1^(+-1) mod alpha,
/// mirror iff beta2 = -beta1^(+-1); amphichiral pairs report same.
Equivalence equivalent(const SchubertForm& a, const SchubertForm& b);

/// min of {beta, beta^-1, alpha - beta, alpha - beta^-1} (mod alpha); equal for
/// two knots iff they are equivalent up to mirror image.
BigInt class_key(const SchubertForm& s);

/// S((8x^2 - 1)^2, 32x^3 - 8x^2 - 8x + 2). Throws DomainError for x < 1.
SchubertForm kx_family(const BigInt& x);

/// [0, 2x, 1, 1, 2x-2, 1, 2x-1, 1, 1, 2x-1]. Throws DomainError for x < 2.
ContinuedFraction kx_simple_cf(const BigInt& x);

/// Sum of the simple continued fraction terms of the canonical form.
BigInt crossing_number(const SchubertForm& s);

}  // namespace twobridge
