#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/continued_fraction.hpp"
#include "twobridge/knot.hpp"

namespace twobridge {

/// One boundary-slope continued fraction with its sign-pattern counts,
/// slope N and multiplicity W.
struct BoundarySlopeRecord {
  ContinuedFraction cf;
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  std::int64_t slope = 0;
  BigInt weight = 1;
};

struct SlopeSystem {
  SchubertForm knot;
  std::vector<BoundarySlopeRecord> records;
  std::size_t longitude_index = 0;

  const BoundarySlopeRecord& longitude() const { return records.at(longitude_index); }
};

/// Every expansion of r in (0,1) with integer part 0 or 1 whose remaining
/// terms all have absolute value >= 2. Depth-first; at each node the
/// candidate nearer to zero is tried first.
std::vector<ContinuedFraction> boundary_slope_expansions(const Rational& r);

/// Full slope system of an even-beta knot. Throws DomainError for odd beta
/// and InternalError unless exactly one expansion is all even.
SlopeSystem enumerate_bscf(const SchubertForm& s);

/// (matches, mismatches) of the tail signs against +, -, +, -, ...
std::pair<std::int64_t, std::int64_t> pattern_counts(const ContinuedFraction& cf);

/// prod(|b| - 1) over the tail; throws DomainError if some |b| < 2.
BigInt weight(const ContinuedFraction& cf);

/// 2((n+ - n-) - (n0+ - n0-)) relative to the longitude expansion.
std::int64_t slope_of(const ContinuedFraction& cf, const ContinuedFraction& longitude);

/**
 * Boundary-slope continued fractions generated from a simple continued
 * fraction by substituting at sets of non-adjacent positions.
 *
 * At tail position j (1-based, term b = L[j]) the preceding term gains 1 and
 *   b = 2m:   L[j] -> (-2,2)^(m-1), -2   and the next term gains 1;
 *   b = 2m+1: L[j] -> (-2,2)^m          and the rest of the tail becomes
 *             [-L[j+1] - 1, -L[j+2], ...].
 * Positions of a set are applied right to left, so every substitution sees
 * its own original term and the sign flips of a left substitution cover the
 * already rewritten tail. Results with a tail term of absolute value < 2 are
 * dropped; the output is sorted and duplicate-free.
 */
std::vector<ContinuedFraction> mmr_substitution_enumerate(const ContinuedFraction& simple);

/// Substitutions applied at the given tail positions (1-based, non-adjacent);
/// no filtering. Throws DomainError on adjacent or out-of-range positions.
ContinuedFraction apply_substitutions(const ContinuedFraction& simple, std::vector<std::size_t> positions);

/// The all-even expansion [0, e1, ..., e2g] of an even-beta knot, built
/// directly by always taking the even candidate. Throws DomainError for odd
/// beta and InternalError if no even expansion exists.
ContinuedFraction longitude_expansion(const SchubertForm& s);

}  // namespace twobridge
