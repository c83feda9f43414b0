#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/knot.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

/// Strongest conclusion reached, in tier order.
enum class Verdict {
  NoCosmetic_BoyerLines,           // Delta''(1) != 0
  NoCosmetic_NiWuTau,              // sigma != 0, hence tau != 0
  NoHomologySphereCosmetic_SL2C,   // lambda(1/q) - lambda(-1/q) != 0
  Inconclusive,
};

std::string to_string(Verdict v);

struct ObstructionReport {
  SchubertForm knot;  // canonical form
  bool mirrored = false;
  std::optional<std::string> name;
  BigInt crossing_number;
  BigInt delta_second;
  std::int64_t sigma = 0;
  Rational casson_difference;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> caveats;

  std::string display_name() const { return name ? *name : knot.str(); }
};

/// Tiered verdict from the three invariants.
Verdict classify(const BigInt& delta_second, std::int64_t sigma, const Rational& casson_difference);

/// Computes every invariant of the canonical form and the tiered verdict.
ObstructionReport obstruct(const SchubertForm& s);

/// Slope pair p/q1, -p/q1 allowed by Ni-Wu conditions (a) and (b).
struct NiWuPair {
  BigInt p;
  BigInt q1;
  BigInt q2() const { return -q1; }
};

/// All q in [1, q_max] coprime to p with q^2 = -1 (mod p). Throws DomainError for p < 1.
std::vector<NiWuPair> niwu_candidate_slopes(const BigInt& p, const BigInt& q_max);

struct CensusOptions {
  int max_crossings = 9;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Canonical representatives (one per knot up to mirror image) with crossing
/// number <= max_crossings, sorted by (alpha, beta).
std::vector<SchubertForm> census_knots(int max_crossings);

/// One report per knot up to mirror image, sorted by (alpha, canonical beta).
/// Throws DomainError for max_crossings < 3.
std::vector<ObstructionReport> census(const CensusOptions& options);

}  // namespace twobridge
