#include "twobridge/slopes.hpp"

#include <algorithm>
#include <set>

#include "twobridge/errors.hpp"

namespace twobridge {
namespace {

struct ExpansionSearch {
  std::vector<ContinuedFraction>* out;
  std::vector<BigInt> terms;
  std::size_t depth_limit;

  // Expand t (|t| > 1) into tail terms of absolute value >= 2.
  void expand(const Rational& t) {
    if (terms.size() > depth_limit)
      throw InternalError("boundary-slope search exceeded its depth bound");
    if (t.is_integer()) {
      if (abs(t.num()) >= 2) {
        terms.push_back(t.num());
        out->emplace_back(terms);
        terms.pop_back();
      }
      return;
    }
    const BigInt lo = t.floor();
    const BigInt hi = lo + 1;
    const BigInt& toward_zero = t.sign() > 0 ? lo : hi;
    const BigInt& away = t.sign() > 0 ? hi : lo;
    for (const BigInt* a : {&toward_zero, &away}) {
      if (abs(*a) < 2) continue;
      // 0 < |t - a| < 1, so the residual again has absolute value > 1.
      terms.push_back(*a);
      expand((t - Rational(*a)).reciprocal());
      terms.pop_back();
    }
  }
};

BigInt simple_term_sum(const Rational& r) {
  BigInt sum = 0;
  for (const auto& t : simple_cf(r).tail()) sum += t;
  return sum;
}

}  // namespace

std::vector<ContinuedFraction> boundary_slope_expansions(const Rational& r) {
  if (r <= Rational(0) || r >= Rational(1))
    throw DomainError("boundary-slope expansions need 0 < r < 1, got " + r.str());
  std::vector<ContinuedFraction> out;
  const BigInt bound = simple_term_sum(r) + 2;
  ExpansionSearch search{&out, {}, bound.convert_to<std::size_t>()};
  for (int c : {0, 1}) {
    search.terms = {BigInt(c)};
    search.expand((r - Rational(c)).reciprocal());
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> pattern_counts(const ContinuedFraction& cf) {
  std::int64_t plus = 0, minus = 0;
  std::size_t j = 1;
  for (const auto& b : cf.tail()) {
    if (b == 0) throw DomainError("pattern counts need nonzero terms: " + cf.str());
    const bool want_positive = (j % 2) == 1;
    ((b > 0) == want_positive ? plus : minus) += 1;
    ++j;
  }
  return {plus, minus};
}

BigInt weight(const ContinuedFraction& cf) {
  BigInt w = 1;
  for (const auto& b : cf.tail()) {
    const BigInt m = abs(b);
    if (m < 2) throw DomainError("weight needs every tail term >= 2 in absolute value: " + cf.str());
    w *= m - 1;
  }
  return w;
}

std::int64_t slope_of(const ContinuedFraction& cf, const ContinuedFraction& longitude) {
  const auto [p, m] = pattern_counts(cf);
  const auto [p0, m0] = pattern_counts(longitude);
  return 2 * ((p - m) - (p0 - m0));
}

SlopeSystem enumerate_bscf(const SchubertForm& s) {
  if ((s.beta() & 1) != 0)
    throw DomainError("enumerate_bscf needs an even-beta form; canonicalize " + s.str() + " first");
  std::vector<ContinuedFraction> expansions = boundary_slope_expansions(s.fraction());

  std::size_t longitude = expansions.size();
  for (std::size_t i = 0; i < expansions.size(); ++i) {
    if (!expansions[i].all_even()) continue;
    if (longitude != expansions.size())
      throw InternalError(s.str() + " has more than one all-even boundary-slope expansion");
    longitude = i;
  }
  if (longitude == expansions.size())
    throw InternalError(s.str() + " has no all-even boundary-slope expansion");

  SlopeSystem sys{s, {}, longitude};
  sys.records.reserve(expansions.size());
  const ContinuedFraction& lon = expansions[longitude];
  for (auto& cf : expansions) {
    BoundarySlopeRecord rec{cf, 0, 0, slope_of(cf, lon), weight(cf)};
    std::tie(rec.n_plus, rec.n_minus) = pattern_counts(cf);
    sys.records.push_back(std::move(rec));
  }
  return sys;
}

ContinuedFraction apply_substitutions(const ContinuedFraction& simple, std::vector<std::size_t> positions) {
  std::vector<BigInt> L = simple.terms();
  const std::size_t n = L.size() - 1;
  std::sort(positions.begin(), positions.end());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > n)
      throw DomainError("substitution position out of range");
    if (i > 0 && positions[i] - positions[i - 1] < 2)
      throw DomainError("substitution positions must be non-adjacent");
  }
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    const std::size_t j = *it;
    const BigInt b = L[j];
    const BigInt m = b / 2;
    std::vector<BigInt> head(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<BigInt> rest(L.begin() + static_cast<std::ptrdiff_t>(j) + 1, L.end());
    head.back() += 1;
    if ((b & 1) == 0) {
      for (BigInt k = 1; k < m; ++k) {
        head.push_back(-2);
        head.push_back(2);
      }
      head.push_back(-2);
      if (!rest.empty()) rest.front() += 1;
    } else {
      for (BigInt k = 0; k < m; ++k) {
        head.push_back(-2);
        head.push_back(2);
      }
      for (auto& r : rest) r = -r;
      if (!rest.empty()) rest.front() -= 1;
    }
    head.insert(head.end(), rest.begin(), rest.end());
    L = std::move(head);
  }
  return ContinuedFraction(std::move(L));
}

std::vector<ContinuedFraction> mmr_substitution_enumerate(const ContinuedFraction& simple) {
  const auto tail = simple.tail();
  if (tail.empty() || tail.back() < 2)
    throw DomainError("not a simple continued fraction: " + simple.str());
  for (const auto& b : tail) {
    if (b < 1) throw DomainError("not a simple continued fraction: " + simple.str());
  }
  const std::size_t n = tail.size();

  std::set<ContinuedFraction> found;
  std::vector<std::size_t> positions;
  // Walk all subsets of {1..n} with no two consecutive members.
  auto visit = [&](auto&& self, std::size_t next) -> void {
    if (next > n) {
      ContinuedFraction cf = apply_substitutions(simple, positions);
      const auto t = cf.tail();
      if (std::all_of(t.begin(), t.end(), [](const BigInt& b) { return abs(b) >= 2; }))
        found.insert(std::move(cf));
      return;
    }
    self(self, next + 1);
    positions.push_back(next);
    self(self, next + 2);
    positions.pop_back();
  };
  visit(visit, 1);
  return {found.begin(), found.end()};
}

ContinuedFraction longitude_expansion(const SchubertForm& s) {
  if ((s.beta() & 1) != 0)
    throw DomainError("longitude expansion needs an even-beta form; canonicalize " + s.str() + " first");
  std::vector<BigInt> terms{0};
  Rational t = s.fraction().reciprocal();
  while (true) {
    if (t.is_integer()) {
      if ((t.num() & 1) != 0)
        throw InternalError(s.str() + " has no all-even expansion");
      terms.push_back(t.num());
      break;
    }
    const BigInt lo = t.floor();
    const BigInt a = (lo & 1) == 0 ? lo : BigInt(lo + 1);
    if (a == 0) throw InternalError(s.str() + " has no all-even expansion");
    terms.push_back(a);
    t = (t - Rational(a)).reciprocal();
  }
  return ContinuedFraction(std::move(terms));
}

}  // namespace twobridge
