#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "twobridge/continued_fraction.hpp"
#include "twobridge/knot.hpp"
#include "oracles.hpp"

namespace support {

// Every S(alpha, beta) with odd alpha in [3, max_alpha].
inline std::vector<twobridge::SchubertForm> all_knots(std::int64_t max_alpha) {
  std::vector<twobridge::SchubertForm> out;
  for (std::int64_t a = 3; a <= max_alpha; a += 2) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

// Every S(alpha, beta) with odd alpha in [3, max_alpha] and even beta.
inline std::vector<twobridge::SchubertForm> even_knots(std::int64_t max_alpha) {
  std::vector<twobridge::SchubertForm> out;
  for (std::int64_t a = 3; a <= max_alpha; a += 2) {
    for (std::int64_t b = 2; b < a; b += 2) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

inline twobridge::ContinuedFraction cf(const oracle::Terms& t) { return twobridge::ContinuedFraction(oracle::big(t)); }

}  // namespace support
