#include "twobridge/continued_fraction.hpp"

#include <algorithm>
#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {

ContinuedFraction::ContinuedFraction(std::vector<BigInt> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("continued fraction needs an integer part");
}

ContinuedFraction::ContinuedFraction(std::initializer_list<long long> terms)
    : ContinuedFraction(std::vector<BigInt>(terms.begin(), terms.end())) {}

bool ContinuedFraction::all_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const BigInt& t) { return (t & 1) == 0; });
}

std::string ContinuedFraction::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < terms_.size(); ++i) out << (i ? "," : "") << terms_[i];
  out << ']';
  return out.str();
}

std::strong_ordering operator<=>(const ContinuedFraction& a, const ContinuedFraction& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i] < b.terms_[i]) return std::strong_ordering::less;
    if (a.terms_[i] > b.terms_[i]) return std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Rational cf_eval(const ContinuedFraction& cf) {
  const auto& t = cf.terms();
  if (t.size() == 1) return Rational(t.front());
  // Fold from the right: value_k = b_k + 1/value_{k+1}.
  Rational value(t.back());
  for (std::size_t i = t.size() - 1; i-- > 0;) {
    if (value.is_zero())
      throw EvaluationError("continued fraction " + cf.str() + " takes the reciprocal of 0");
    value = Rational(t[i]) + value.reciprocal();
  }
  return value;
}

ContinuedFraction simple_cf(const Rational& r) {
  if (r <= Rational(0) || r >= Rational(1))
    throw DomainError("simple_cf expects 0 < r < 1, got " + r.str());
  std::vector<BigInt> terms{0};
  BigInt p = r.den(), q = r.num();  // expanding p/q = 1/r
  while (q != 0) {
    BigInt a = p / q;
    BigInt rem = p - a * q;
    terms.push_back(a);
    p = q;
    q = rem;
  }
  return ContinuedFraction(std::move(terms));
}

}  // namespace twobridge
