#include "twobridge/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "twobridge/alexander.hpp"
#include "twobridge/casson.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/knot_table.hpp"
#include "twobridge/slopes.hpp"

namespace twobridge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NoCosmetic_BoyerLines: return "NoCosmetic_BoyerLines";
    case Verdict::NoCosmetic_NiWuTau: return "NoCosmetic_NiWuTau";
    case Verdict::NoHomologySphereCosmetic_SL2C: return "NoHomologySphereCosmetic_SL2C";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Verdict classify(const BigInt& delta_second, std::int64_t sigma, const Rational& casson_difference) {
  if (delta_second != 0) return Verdict::NoCosmetic_BoyerLines;
  if (!is_tau_zero(sigma)) return Verdict::NoCosmetic_NiWuTau;
  if (!casson_difference.is_zero()) return Verdict::NoHomologySphereCosmetic_SL2C;
  return Verdict::Inconclusive;
}

ObstructionReport obstruct(const SchubertForm& s) {
  const CanonicalKnot canon = canonicalize(s);
  const SeifertMatrix seifert = seifert_from_conway(conway_even_form(canon.form));
  const LaurentPolynomial delta = alexander_poly(seifert);
  const SlopeSystem sys = enumerate_bscf(canon.form);

  ObstructionReport report{canon.form,
                           canon.mirrored,
                           knot_name(canon.form),
                           crossing_number(canon.form),
                           second_derivative_at_one(delta),
                           signature(seifert),
                           cosmetic_difference(sys),
                           Verdict::Inconclusive,
                           {}};
  report.verdict = classify(report.delta_second, report.sigma, report.casson_difference);
  if (report.mirrored)
    report.caveats.emplace_back("input is the mirror image of " + canon.form.str() +
                                "; sigma and casson_difference are reported for the canonical form");
  if (report.verdict == Verdict::NoHomologySphereCosmetic_SL2C)
    report.caveats.emplace_back("rules out purely cosmetic pairs among homology-sphere surgeries only");
  return report;
}

std::vector<NiWuPair> niwu_candidate_slopes(const BigInt& p, const BigInt& q_max) {
  if (p < 1) throw DomainError("Ni-Wu candidates need p >= 1");
  std::vector<NiWuPair> out;
  for (BigInt q = 1; q <= q_max; ++q) {
    if (gcd(p, q) != 1) continue;
    if (mod(q * q + 1, p) == 0) out.push_back({p, q});
  }
  return out;
}

std::vector<SchubertForm> census_knots(int max_crossings) {
  if (max_crossings < 3) throw DomainError("census needs max_crossings >= 3");
  // A simple continued fraction with term sum c has denominator at most F(c+1).
  BigInt fib_prev = 1, fib = 1;
  for (int i = 2; i <= max_crossings; ++i) {
    BigInt next = fib + fib_prev;
    fib_prev = fib;
    fib = next;
  }
  std::map<std::pair<BigInt, BigInt>, SchubertForm> classes;
  for (BigInt alpha = 3; alpha <= fib; alpha += 2) {
    for (BigInt beta = 1; beta < alpha; ++beta) {
      if (gcd(alpha, beta) != 1) continue;
      const SchubertForm s(alpha, beta);
      const BigInt key = class_key(s);
      if (classes.count({alpha, key})) continue;
      if (crossing_number(s) > max_crossings) continue;
      classes.emplace(std::pair{alpha, key}, canonicalize(SchubertForm(alpha, key)).form);
    }
  }
  std::vector<SchubertForm> out;
  for (auto& [key, form] : classes) out.push_back(form);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ObstructionReport> census(const CensusOptions& options) {
  const std::vector<SchubertForm> knots = census_knots(options.max_crossings);
  std::vector<std::optional<ObstructionReport>> slots(knots.size());

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(knots.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < knots.size(); i = next++) {
      try {
        slots[i] = obstruct(knots[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ObstructionReport> reports;
  reports.reserve(slots.size());
  for (auto& slot : slots) reports.push_back(std::move(*slot));
  return reports;
}

}  // namespace twobridge
