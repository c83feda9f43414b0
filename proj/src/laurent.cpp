#include "twobridge/laurent.hpp"

#include <sstream>

#include "twobridge/errors.hpp"

namespace twobridge {

LaurentPolynomial::LaurentPolynomial(std::initializer_list<std::pair<const Exponent, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& c, Exponent e) {
  LaurentPolynomial p;
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_ascending(std::initializer_list<long long> coefficients) {
  LaurentPolynomial p;
  Exponent e = 0;
  for (long long c : coefficients) p.add_term(e++, c);
  return p;
}

void LaurentPolynomial::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPolynomial::Exponent LaurentPolynomial::min_exponent() const { return terms_.begin()->first; }
LaurentPolynomial::Exponent LaurentPolynomial::max_exponent() const { return terms_.rbegin()->first; }

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

namespace {

template <class T>
T power(const T& base, LaurentPolynomial::Exponent k) {
  T out(1), b = base;
  for (; k > 0; k >>= 1) {
    if (k & 1) out *= b;
    b *= b;
  }
  return out;
}

// Horner on sum c_e t^(e - low), from the top exponent down.
template <class T>
T horner(const std::map<LaurentPolynomial::Exponent, BigInt>& terms, const T& t) {
  T acc(0);
  auto it = terms.rbegin();
  LaurentPolynomial::Exponent previous = it->first;
  for (; it != terms.rend(); ++it) {
    acc *= power(t, previous - it->first);
    acc += T(it->second);
    previous = it->first;
  }
  return acc;
}

}  // namespace

BigInt LaurentPolynomial::value_at(const BigInt& t) const {
  if (terms_.empty()) return 0;
  const Exponent low = min_exponent();
  if (t == 0 && low < 0) throw DomainError("Laurent polynomial with negative exponents evaluated at 0");
  const BigInt shifted_value = horner<BigInt>(terms_, t);
  if (low >= 0) return shifted_value * power<BigInt>(t, low);
  const Rational v(shifted_value, power<BigInt>(t, -low));
  if (!v.is_integer()) throw DomainError("value at " + t.str() + " is not an integer: " + v.str());
  return v.num();
}

Rational LaurentPolynomial::value_at(const Rational& t) const {
  if (terms_.empty()) return Rational(0);
  const Exponent low = min_exponent();
  if (t.is_zero() && low < 0) throw DomainError("Laurent polynomial with negative exponents evaluated at 0");
  const Rational shifted_value = horner<Rational>(terms_, t);
  return low >= 0 ? shifted_value * power<Rational>(t, low) : shifted_value / power<Rational>(t, -low);
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent by) const {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  }
  return p;
}

LaurentPolynomial operator*(const BigInt& c, const LaurentPolynomial& p) {
  LaurentPolynomial r;
  if (c == 0) return r;
  for (const auto& [e, coeff] : p.terms_) r.terms_.emplace(e, c * coeff);
  return r;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const BigInt mag = abs(c);
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace twobridge
