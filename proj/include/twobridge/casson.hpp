#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/laurent.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/slopes.hpp"

namespace twobridge {

/// Surgery slope p/q with q >= 1 and gcd(|p|, q) = 1, or the meridian 1/0.
class SurgerySlope {
 public:
  /// Normalizes the sign into p; throws DomainError for non-reduced input or a zero
  /// denominator other than the meridian.
  SurgerySlope(BigInt p, BigInt q);
  /// "p/q" or "p"; throws ParseError / DomainError.
  static SurgerySlope parse(std::string_view text);
  static SurgerySlope meridian() { return SurgerySlope(1, 0); }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_meridian() const { return q_ == 0; }
  std::string str() const { return p_.str() + "/" + q_.str(); }

  SurgerySlope operator-() const { return SurgerySlope(-p_, q_); }
  friend bool operator==(const SurgerySlope&, const SurgerySlope&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

struct LambdaValue {
  std::optional<Rational> value;  // empty when p = 0
  bool hypotheses_ok = false;
  std::vector<std::string> caveats;
};

/// Minimal geometric intersection |p - qN| of p/q with the integral slope N.
BigInt slope_distance(const SurgerySlope& r, const BigInt& n);

/// 1/2 (-|p| + sum_i W_i |p - q N_i|) over every record. Throws MeridianError.
Rational total_seminorm(const SlopeSystem& sys, const SurgerySlope& r);

/**
 * SL(2,C) Casson invariant of p/q-surgery on s via the seminorm formula:
 * |r|_T / 2 for even p, |r|_T / 2 - (alpha - 1) / 4 for odd p.
 *
 * A mirrored input is evaluated on the canonical knot at -p/q. hypotheses_ok
 * requires that no p'-th root of unity is a root of the Alexander polynomial
 * (p' = p for odd p, p/2 for even p) and that p/q is not a boundary slope.
 */
LambdaValue lambda_surgery(const SchubertForm& s, const SurgerySlope& r);

/// 1/4 sum_i W_i (|p - qN_i| - |-p - qN_i|). Throws DomainError unless p is odd,
/// p >= 1, q >= 1 and gcd(p, q) = 1.
Rational lambda_difference(const SlopeSystem& sys, const BigInt& p, const BigInt& q);

/// 1/2 (sum_{N<0} W - sum_{N>0} W): the value of lambda(1/q) - lambda(-1/q).
Rational cosmetic_difference(const SlopeSystem& sys);

/// Resultant of two polynomials with non-negative exponents (exact, via the
/// Euclidean recurrence over Q).
BigInt resultant(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Resultant of t^k Delta(t) (shifted to start at t^0) and t^p' - 1.
BigInt root_of_unity_resultant(const LaurentPolynomial& delta, const BigInt& p_prime);

/// True iff no p'-th root of unity is a root of delta. Throws DomainError for p' < 1.
bool root_of_unity_check(const LaurentPolynomial& delta, const BigInt& p_prime);

}  // namespace twobridge
