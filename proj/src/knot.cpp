#include "twobridge/knot.hpp"

#include <algorithm>
#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {

SchubertForm::SchubertForm(BigInt alpha, BigInt beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ < 3 || (alpha_ & 1) == 0)
    throw DomainError("S(" + alpha_.str() + "," + beta_.str() +
                      "): alpha must be odd and >= 3 (even alpha is a two-bridge link)");
  if (beta_ <= 0 || beta_ >= alpha_)
    throw DomainError("S(" + alpha_.str() + "," + beta_.str() + "): need 0 < beta < alpha");
  if (gcd(alpha_, beta_) != 1)
    throw DomainError("S(" + alpha_.str() + "," + beta_.str() + "): alpha and beta must be coprime");
}

std::string SchubertForm::str() const { return "S(" + alpha_.str() + "," + beta_.str() + ")"; }

std::strong_ordering operator<=>(const SchubertForm& a, const SchubertForm& b) {
  if (a.alpha_ != b.alpha_) return a.alpha_ < b.alpha_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.beta_ != b.beta_) return a.beta_ < b.beta_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ConwayForm::ConwayForm(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() % 2 != 0)
    throw DomainError("Conway form needs a nonzero even number of entries");
  for (const auto& e : entries_) {
    if (e == 0 || (e & 1) != 0)
      throw DomainError("Conway form entries must be even and nonzero, got " + e.str());
  }
}

std::string ConwayForm::str() const {
  std::ostringstream out;
  out << "C[";
  for (std::size_t i = 0; i < entries_.size(); ++i) out << (i ? "," : "") << entries_[i];
  out << ']';
  return out.str();
}

SchubertForm ConwayForm::schubert() const {
  std::vector<BigInt> terms{0};
  terms.insert(terms.end(), entries_.begin(), entries_.end());
  const Rational value = cf_eval(ContinuedFraction(std::move(terms)));
  return SchubertForm(value.den(), mod(value.num(), value.den()));
}

CanonicalKnot canonicalize(const SchubertForm& s) {
  if ((s.beta() & 1) == 0) return {s, false};
  const BigInt mirrored = s.alpha() - s.beta();
  BigInt best = mirrored;
  const BigInt inverse = *mod_inverse(mirrored, s.alpha());
  if ((inverse & 1) == 0 && inverse < best) best = inverse;
  return {SchubertForm(s.alpha(), best), true};
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::same: return "same";
    case Equivalence::mirror: return "mirror";
    case Equivalence::distinct: return "distinct";
  }
  return "distinct";
}

Equivalence equivalent(const SchubertForm& a, const SchubertForm& b) {
  if (a.alpha() != b.alpha()) return Equivalence::distinct;
  const BigInt& alpha = a.alpha();
  const BigInt inv = *mod_inverse(a.beta(), alpha);
  if (b.beta() == a.beta() || b.beta() == inv) return Equivalence::same;
  if (b.beta() == alpha - a.beta() || b.beta() == mod(-inv, alpha)) return Equivalence::mirror;
  return Equivalence::distinct;
}

BigInt class_key(const SchubertForm& s) {
  const BigInt& alpha = s.alpha();
  const BigInt inv = *mod_inverse(s.beta(), alpha);
  return std::min({s.beta(), inv, BigInt(alpha - s.beta()), BigInt(alpha - inv)});
}

SchubertForm kx_family(const BigInt& x) {
  if (x < 1) throw DomainError("K_x is defined for x >= 1, got " + x.str());
  const BigInt a = 8 * x * x - 1;
  return SchubertForm(a * a, 32 * x * x * x - 8 * x * x - 8 * x + 2);
}

ContinuedFraction kx_simple_cf(const BigInt& x) {
  if (x < 2) throw DomainError("the K_x simple continued fraction template needs x >= 2, got " + x.str());
  const BigInt two_x = 2 * x;
  return ContinuedFraction(std::vector<BigInt>{0, two_x, 1, 1, two_x - 2, 1, two_x - 1, 1, 1, two_x - 1});
}

BigInt crossing_number(const SchubertForm& s) {
  const ContinuedFraction cf = simple_cf(canonicalize(s).form.fraction());
  BigInt sum = 0;
  for (const auto& t : cf.tail()) sum += t;
  return sum;
}

}  // namespace twobridge
