#include "twobridge/alexander.hpp"

#include <optional>
#include <utility>

#include "twobridge/errors.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/slopes.hpp"

namespace twobridge {

SeifertMatrix::SeifertMatrix(const IntMatrix& entries) : n_(entries.size()), rows_(entries.size()) {
  if (n_ == 0 || n_ % 2 != 0) throw DomainError("Seifert matrix size must be even and positive");
  for (std::size_t i = 0; i < n_; ++i) {
    if (entries[i].size() != n_) throw DomainError("Seifert matrix must be square");
    for (std::size_t j = 0; j < n_; ++j) {
      if (entries[i][j] != 0) rows_[i].emplace(j, entries[i][j]);
    }
  }
}

SeifertMatrix::SeifertMatrix(std::size_t n, const std::vector<Entry>& nonzeros) : n_(n), rows_(n) {
  if (n_ == 0 || n_ % 2 != 0) throw DomainError("Seifert matrix size must be even and positive");
  for (const auto& e : nonzeros) {
    if (e.row >= n_ || e.col >= n_) throw DomainError("Seifert matrix entry out of range");
    if (e.value == 0) {
      rows_[e.row].erase(e.col);
    } else {
      rows_[e.row][e.col] = e.value;
    }
  }
}

IntMatrix SeifertMatrix::entries() const {
  IntMatrix out(n_, std::vector<BigInt>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& [j, v] : rows_[i]) out[i][j] = v;
  }
  return out;
}

const BigInt& SeifertMatrix::operator()(std::size_t i, std::size_t j) const {
  static const BigInt zero = 0;
  const auto it = rows_.at(i).find(j);
  return it == rows_[i].end() ? zero : it->second;
}

bool SeifertMatrix::is_tridiagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& [j, v] : rows_[i]) {
      if (i > j + 1 || j > i + 1) return false;
    }
  }
  return true;
}

SeifertMatrix seifert_from_conway(const ConwayForm& c) {
  const auto& e = c.entries();
  const std::size_t n = e.size();
  std::vector<SeifertMatrix::Entry> nonzeros;
  for (std::size_t i = 0; i < n; ++i) {
    // 0-based i is the 1-based (i+1)-th entry: sign (-1)^(i+2) = +1 for even i.
    nonzeros.push_back({i, i, (i % 2 == 0) ? BigInt(e[i] / 2) : BigInt(-e[i] / 2)});
  }
  for (std::size_t row = 1; row < n; row += 2) {
    nonzeros.push_back({row, row - 1, 1});
    if (row + 1 < n) nonzeros.push_back({row, row + 1, 1});
  }
  return SeifertMatrix(n, nonzeros);
}

namespace detail {
namespace {

// Continuant recurrence in 64-bit arithmetic; nullopt on overflow.
std::optional<std::vector<std::int64_t>> continuant_small(const SeifertMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> d(n), ab(n), squares(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto dk = to_int64(m(k, k));
    if (!dk) return std::nullopt;
    d[k] = *dk;
    if (k == 0) continue;
    const auto a = to_int64(m(k, k - 1));
    const auto b = to_int64(m(k - 1, k));
    if (!a || !b) return std::nullopt;
    std::int64_t a2 = 0, b2 = 0;
    if (__builtin_mul_overflow(*a, *b, &ab[k]) || __builtin_mul_overflow(*a, *a, &a2) ||
        __builtin_mul_overflow(*b, *b, &b2) || __builtin_add_overflow(a2, b2, &squares[k]))
      return std::nullopt;
  }
  std::vector<std::int64_t> before{1}, current{d[0], -d[0]}, next;
  for (std::size_t k = 1; k < n; ++k) {
    next.assign(current.size() + 1, 0);
    for (std::size_t i = 0; i < current.size(); ++i) {
      std::int64_t x = 0;
      if (__builtin_mul_overflow(d[k], current[i], &x) || __builtin_add_overflow(next[i], x, &next[i]) ||
          __builtin_sub_overflow(next[i + 1], x, &next[i + 1]))
        return std::nullopt;
    }
    for (std::size_t i = 0; i < before.size(); ++i) {
      std::int64_t x = 0, y = 0;
      if (__builtin_mul_overflow(ab[k], before[i], &x) || __builtin_mul_overflow(squares[k], before[i], &y) ||
          __builtin_sub_overflow(next[i], x, &next[i]) || __builtin_add_overflow(next[i + 1], y, &next[i + 1]) ||
          __builtin_sub_overflow(next[i + 2], x, &next[i + 2]))
        return std::nullopt;
    }
    before.swap(current);
    current.swap(next);
  }
  return current;
}

}  // namespace

LaurentPolynomial pencil_det_tridiagonal(const SeifertMatrix& m) {
  if (!m.is_tridiagonal()) throw DomainError("continuant recurrence needs a tridiagonal Seifert matrix");
  LaurentPolynomial result;
  if (const auto small = continuant_small(m)) {
    for (std::size_t i = 0; i < small->size(); ++i) {
      if ((*small)[i] != 0)
        result += LaurentPolynomial::monomial((*small)[i], static_cast<LaurentPolynomial::Exponent>(i));
    }
    return result;
  }
  // Dense ascending coefficients; every pencil entry has degree <= 1, so each
  // step is linear in the current degree.
  using Dense = std::vector<BigInt>;
  auto times_linear = [](const Dense& p, const BigInt& c0, const BigInt& c1, const BigInt& c2) {
    Dense out(p.size() + 2, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      out[i] += c0 * p[i];
      out[i + 1] += c1 * p[i];
      out[i + 2] += c2 * p[i];
    }
    return out;
  };
  Dense before{1};
  Dense current{m(0, 0), -m(0, 0)};
  for (std::size_t k = 1; k < m.size(); ++k) {
    // (M - tM^T)_kk = m_kk (1 - t); the off-diagonal pair contributes
    // (a - tb)(b - ta) = ab - (a^2 + b^2) t + ab t^2.
    const BigInt& d = m(k, k);
    const BigInt& a = m(k, k - 1);
    const BigInt& b = m(k - 1, k);
    Dense next = times_linear(current, d, -d, 0);
    const Dense off = times_linear(before, a * b, -(a * a + b * b), a * b);
    if (off.size() > next.size()) next.resize(off.size(), 0);
    for (std::size_t i = 0; i < off.size(); ++i) next[i] -= off[i];
    before = std::move(current);
    current = std::move(next);
  }
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (current[i] != 0)
      result += LaurentPolynomial::monomial(current[i], static_cast<LaurentPolynomial::Exponent>(i));
  }
  return result;
}

BigInt integer_det(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

LaurentPolynomial pencil_det_dense(const SeifertMatrix& m) {
  const std::size_t n = m.size();
  // Values at t = 0..n determine the degree-n determinant.
  std::vector<Rational> divided(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j) - BigInt(x) * m(j, i);
    }
    divided[x] = Rational(integer_det(std::move(a)));
  }
  // Newton divided differences on nodes 0..n.
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      divided[i] = (divided[i] - divided[i - 1]) / Rational(static_cast<long long>(level));
    }
  }
  // Horner on the Newton form: P = c_n; P = P (t - k) + c_k.
  std::vector<Rational> poly{divided[n]};
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * Rational(static_cast<long long>(k));
    }
    next[0] += divided[k];
    poly = std::move(next);
  }
  LaurentPolynomial result;
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (!poly[d].is_integer()) throw InternalError("interpolated determinant has a non-integral coefficient");
    result += LaurentPolynomial::monomial(poly[d].num(), static_cast<LaurentPolynomial::Exponent>(d));
  }
  return result;
}

}  // namespace detail

LaurentPolynomial alexander_poly(const SeifertMatrix& m) {
  const LaurentPolynomial det =
      m.is_tridiagonal() ? detail::pencil_det_tridiagonal(m) : detail::pencil_det_dense(m);
  LaurentPolynomial centered = det.shifted(-static_cast<LaurentPolynomial::Exponent>(m.genus()));
  if (!centered.is_symmetric())
    throw NormalizationError("det(M - tM^T) = " + det.str() + " is not symmetric after t^-g");
  const BigInt at_one = centered.value_at(BigInt(1));
  if (at_one == -1) return -centered;
  if (at_one != 1)
    throw NormalizationError("det(M - tM^T) = " + det.str() + " has value " + at_one.str() + " at t = 1");
  return centered;
}

ConwayForm conway_even_form(const SchubertForm& s) {
  const ContinuedFraction lon = longitude_expansion(s);
  if ((lon.integer_part() & 1) != 0) throw InternalError("longitude expansion has an odd integer part");
  const auto tail = lon.tail();
  return ConwayForm(std::vector<BigInt>(tail.begin(), tail.end()));
}

BigInt second_derivative_at_one(const LaurentPolynomial& d) {
  BigInt sum = 0;
  for (const auto& [e, c] : d.terms()) sum += c * BigInt(e) * BigInt(e - 1);
  return sum;
}

LaurentPolynomial kx_alexander_closed(const BigInt& x) {
  const BigInt x2 = x * x;
  const BigInt x4 = x2 * x2;
  const BigInt c3 = -x4;
  const BigInt c2 = 6 * x4 - x2;
  const BigInt c1 = -(15 * x4 - 4 * x2);
  const BigInt c0 = 20 * x4 - 6 * x2 + 1;
  return LaurentPolynomial{{-3, c3}, {-2, c2}, {-1, c1}, {0, c0}, {1, c1}, {2, c2}, {3, c3}};
}

LaurentPolynomial genus3_closed_form(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                                     const BigInt& e, const BigInt& f) {
  const LaurentPolynomial one_minus_t = LaurentPolynomial::from_ascending({1, -1});
  const LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial s2 = one_minus_t * one_minus_t;
  const LaurentPolynomial s4 = s2 * s2;
  const LaurentPolynomial s6 = s4 * s2;
  const BigInt middle = (a + c) * d * e * f - a * b * c * (d + f) + a * b * e * f;
  return (a * b * c * d * e * f) * s6 + middle * (t * s4) + (a * b + e * f) * (t * t * s2) +
         LaurentPolynomial::monomial(1, 3);
}

namespace {

// LDL^T of the tridiagonal M + M^T without pivoting; nullopt when a pivot
// other than the last vanishes.
std::optional<std::int64_t> tridiagonal_signature(const SeifertMatrix& m) {
  const std::size_t n = m.size();
  std::int64_t sig = 0;
  Rational d;
  for (std::size_t k = 0; k < n; ++k) {
    Rational next(2 * m(k, k));
    if (k > 0) {
      const BigInt off = m(k, k - 1) + m(k - 1, k);
      next -= Rational(off * off) / d;
    }
    if (next.is_zero()) {
      if (k + 1 < n) return std::nullopt;
      throw SingularError("M + M^T is singular");
    }
    sig += next.sign();
    d = std::move(next);
  }
  return sig;
}

}  // namespace

std::int64_t signature(const SeifertMatrix& m) {
  if (m.is_tridiagonal()) {
    if (auto sig = tridiagonal_signature(m)) return *sig;
  }
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s[i][j] = Rational(m(i, j) + m(j, i));
  }
  auto swap_index = [&](std::size_t a, std::size_t b) {
    std::swap(s[a], s[b]);
    for (auto& row : s) std::swap(row[a], row[b]);
  };

  std::int64_t positive = 0, negative = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t j = k + 1;
      while (j < n && s[j][j].is_zero()) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        // All remaining diagonal entries vanish: replace e_k by e_k + e_j for
        // some j with s[k][j] != 0, giving a diagonal entry 2 s[k][j].
        j = k + 1;
        while (j < n && s[k][j].is_zero()) ++j;
        if (j == n) throw SingularError("M + M^T is singular");
        for (std::size_t c = 0; c < n; ++c) s[k][c] += s[j][c];
        for (std::size_t r = 0; r < n; ++r) s[r][k] += s[r][j];
      }
    }
    const Rational pivot = s[k][k];
    (pivot.sign() > 0 ? positive : negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s[i][k].is_zero()) continue;
      const Rational factor = s[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) s[i][j] -= factor * s[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      s[i][k] = Rational(0);
      s[k][i] = Rational(0);
    }
  }
  return positive - negative;
}

}  // namespace twobridge
