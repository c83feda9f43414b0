#include "twobridge/casson.hpp"

#include <algorithm>

#include "twobridge/alexander.hpp"
#include "twobridge/errors.hpp"

namespace twobridge {

SurgerySlope::SurgerySlope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  if (q_ == 0) {
    if (abs(p_) != 1) throw DomainError("slope " + p_.str() + "/0 is not reduced");
    p_ = 1;
    return;
  }
  if (gcd(p_, q_) != 1) throw DomainError("slope " + p_.str() + "/" + q_.str() + " is not reduced");
}

SurgerySlope SurgerySlope::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SurgerySlope(parse_bigint(text), 1);
  return SurgerySlope(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigInt slope_distance(const SurgerySlope& r, const BigInt& n) {
  if (r.is_meridian()) throw MeridianError("the meridian 1/0 is not a surgery slope");
  return abs(r.p() - r.q() * n);
}

Rational total_seminorm(const SlopeSystem& sys, const SurgerySlope& r) {
  if (r.is_meridian()) throw MeridianError("the meridian 1/0 is not a surgery slope");
  BigInt sum = -abs(r.p());
  for (const auto& rec : sys.records) sum += rec.weight * slope_distance(r, rec.slope);
  return Rational(sum, 2);
}

LambdaValue lambda_surgery(const SchubertForm& s, const SurgerySlope& r) {
  if (r.is_meridian()) throw MeridianError("the meridian 1/0 is not a surgery slope");
  const CanonicalKnot canon = canonicalize(s);
  const SurgerySlope slope = canon.mirrored ? -r : r;

  LambdaValue out;
  if (slope.p() == 0) {
    out.caveats.emplace_back("p = 0: the surgery formula's hypotheses are unmet (p' = 0)");
    return out;
  }

  const SlopeSystem sys = enumerate_bscf(canon.form);
  const Rational half_norm = total_seminorm(sys, slope) / Rational(2);
  const bool p_odd = (slope.p() & 1) != 0;
  out.value = p_odd ? half_norm - Rational(canon.form.alpha() - 1, 4) : half_norm;

  out.hypotheses_ok = true;
  const BigInt p_prime = p_odd ? abs(slope.p()) : BigInt(abs(slope.p()) / 2);
  const LaurentPolynomial delta = alexander_poly(seifert_from_conway(conway_even_form(canon.form)));
  if (!root_of_unity_check(delta, p_prime)) {
    out.hypotheses_ok = false;
    out.caveats.push_back("a " + p_prime.str() + "-th root of unity is a root of the Alexander polynomial");
  }
  if (slope.q() == 1) {
    const bool is_boundary = std::any_of(sys.records.begin(), sys.records.end(),
                                         [&](const BoundarySlopeRecord& rec) { return rec.slope == slope.p(); });
    if (is_boundary) {
      out.hypotheses_ok = false;
      out.caveats.emplace_back("p/q equals a boundary slope; strictness unverified");
    } else if (!p_odd) {
      out.caveats.emplace_back("strictness unverified");
    }
  }
  return out;
}

Rational lambda_difference(const SlopeSystem& sys, const BigInt& p, const BigInt& q) {
  if (p < 1 || (p & 1) == 0) throw DomainError("lambda_difference needs an odd p >= 1");
  if (q < 1 || gcd(p, q) != 1) throw DomainError("lambda_difference needs q >= 1 coprime to p");
  BigInt sum = 0;
  for (const auto& rec : sys.records) {
    const BigInt qn = q * rec.slope;
    sum += rec.weight * (abs(p - qn) - abs(-p - qn));
  }
  return Rational(sum, 4);
}

Rational cosmetic_difference(const SlopeSystem& sys) {
  BigInt sum = 0;
  for (const auto& rec : sys.records) {
    if (rec.slope < 0) sum += rec.weight;
    if (rec.slope > 0) sum -= rec.weight;
  }
  return Rational(sum, 2);
}

namespace {

using QPoly = std::vector<Rational>;  // ascending coefficients, no trailing zeros

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly to_qpoly(const LaurentPolynomial& f) {
  if (!f.is_zero() && f.min_exponent() < 0) throw DomainError("resultant needs non-negative exponents");
  QPoly p;
  if (f.is_zero()) return p;
  p.resize(static_cast<std::size_t>(f.max_exponent()) + 1);
  for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e)] = Rational(c);
  return p;
}

QPoly remainder(QPoly f, const QPoly& g) {
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const Rational factor = f.back() / g.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] -= factor * g[i];
    f.pop_back();
    trim(f);
  }
  return f;
}

Rational power(const Rational& base, std::size_t exponent) {
  Rational out(1);
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Res(f, g) = (-1)^(deg f deg g) lc(g)^(deg f - deg r) Res(g, r), r = f mod g.
Rational resultant_q(QPoly f, QPoly g) {
  Rational scale(1);
  while (true) {
    if (f.empty() || g.empty()) return Rational(0);
    const std::size_t df = f.size() - 1;
    const std::size_t dg = g.size() - 1;
    if (dg == 0) return scale * power(g.front(), df);
    QPoly r = remainder(f, g);
    if (r.empty()) return Rational(0);
    const std::size_t dr = r.size() - 1;
    if ((df * dg) % 2 == 1) scale = -scale;
    scale *= power(g.back(), df - dr);
    f = std::move(g);
    g = std::move(r);
  }
}

QPoly multiply_mod(const QPoly& a, const QPoly& b, const QPoly& m) {
  if (a.empty() || b.empty()) return {};
  QPoly prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  trim(prod);
  return remainder(std::move(prod), m);
}

// t^n mod m by square and multiply; deg m >= 1.
QPoly power_of_t_mod(BigInt n, const QPoly& m) {
  QPoly result = remainder(QPoly{Rational(1)}, m);
  QPoly base = remainder(QPoly{Rational(0), Rational(1)}, m);
  while (n > 0) {
    if ((n & 1) != 0) result = multiply_mod(result, base, m);
    base = multiply_mod(base, base, m);
    n >>= 1;
  }
  return result;
}

}  // namespace

BigInt resultant(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  const Rational r = resultant_q(to_qpoly(f), to_qpoly(g));
  if (!r.is_integer()) throw InternalError("resultant of integer polynomials is not an integer");
  return r.num();
}

BigInt root_of_unity_resultant(const LaurentPolynomial& delta, const BigInt& p_prime) {
  if (p_prime < 1) throw DomainError("root-of-unity order must be >= 1");
  if (delta.is_zero()) return 0;
  const LaurentPolynomial shifted = delta.shifted(-delta.min_exponent());
  const auto order = p_prime.convert_to<LaurentPolynomial::Exponent>();
  const LaurentPolynomial cyclic = LaurentPolynomial::monomial(1, order) - LaurentPolynomial::constant(1);
  return resultant(shifted, cyclic);
}

bool root_of_unity_check(const LaurentPolynomial& delta, const BigInt& p_prime) {
  if (p_prime < 1) throw DomainError("root-of-unity order must be >= 1");
  if (delta.is_zero()) return false;
  const QPoly f = to_qpoly(delta.shifted(-delta.min_exponent()));
  if (f.size() == 1) return true;
  // gcd(f, t^p' - 1) = gcd(f, (t^p' mod f) - 1), so p' never has to be expanded.
  QPoly g = power_of_t_mod(p_prime, f);
  if (g.empty()) g.push_back(Rational(0));
  g[0] -= Rational(1);
  trim(g);
  if (g.empty()) return false;
  return !resultant_q(f, g).is_zero();
}

}  // namespace twobridge
