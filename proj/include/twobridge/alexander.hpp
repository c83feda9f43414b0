#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/laurent.hpp"

namespace twobridge {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Square integer Seifert matrix of even size 2g, stored by nonzero entries.
class SeifertMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    BigInt value;
  };

  /// Throws DomainError unless the matrix is square, nonempty and of even size.
  explicit SeifertMatrix(const IntMatrix& entries);
  /// n x n matrix with the listed entries and zeros elsewhere. Throws DomainError
  /// for odd or zero n and out-of-range positions.
  SeifertMatrix(std::size_t n, const std::vector<Entry>& nonzeros);

  std::size_t size() const { return n_; }
  std::size_t genus() const { return n_ / 2; }
  IntMatrix entries() const;
  const BigInt& operator()(std::size_t i, std::size_t j) const;

  /// Nonzero entries only on the three central diagonals.
  bool is_tridiagonal() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::map<std::size_t, BigInt>> rows_;
};

/// Chain-of-bands Seifert matrix of C[e1..e2g]: diagonal (-1)^(i+1) e_i / 2
/// (1-based), ones at (2k, 2k-1) and (2k, 2k+1).
SeifertMatrix seifert_from_conway(const ConwayForm& c);

/// det(M - t M^T) times +-t^-g, normalized to be symmetric with value 1 at t = 1.
/// Throws NormalizationError when no such normalization exists.
LaurentPolynomial alexander_poly(const SeifertMatrix& m);

/// Tail of the all-even boundary-slope expansion of an even-beta knot.
ConwayForm conway_even_form(const SchubertForm& s);

/// Sum of c_k k (k - 1); the second derivative at t = 1.
BigInt second_derivative_at_one(const LaurentPolynomial& d);

/// -x^4(t^-3+t^3) + (6x^4-x^2)(t^-2+t^2) - (15x^4-4x^2)(t^-1+t) + 20x^4-6x^2+1
LaurentPolynomial kx_alexander_closed(const BigInt& x);

/// ABCDEF(1-t)^6 + ((A+C)DEF - ABC(D+F) + ABEF) t(1-t)^4 + (AB+EF) t^2(1-t)^2 + t^3,
/// exactly as printed for the genus-3 chain. It agrees with det(M - tM^T) only
/// when D + F = 0; see tests.
LaurentPolynomial genus3_closed_form(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                                     const BigInt& e, const BigInt& f);

/// Signature of M + M^T by exact congruence diagonalization. Throws SingularError.
std::int64_t signature(const SeifertMatrix& m);

inline bool is_tau_zero(std::int64_t sigma) { return sigma == 0; }

namespace detail {

/// det(M - t M^T) via the three-term continuant recurrence; M must be tridiagonal.
LaurentPolynomial pencil_det_tridiagonal(const SeifertMatrix& m);

/// det(M - t M^T) by evaluating at t = 0..n with Bareiss elimination and
/// interpolating exactly. Works for any square M.
LaurentPolynomial pencil_det_dense(const SeifertMatrix& m);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt integer_det(IntMatrix a);

}  // namespace detail
}  // namespace twobridge
