#include "phylocount/genfun/laurent.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace phylocount::genfun {

LaurentX::LaurentX(const Rational& c) { set(0, c); }

LaurentX LaurentX::monomial(int d, const Rational& c) {
  LaurentX r;
  r.set(d, c);
  return r;
}

LaurentX LaurentX::z() { return monomial(0, Rational(1, 2)) + monomial(2, Rational(-1, 2)); }

void LaurentX::set(int d, const Rational& c) {
  if (c == 0)
    terms_.erase(d);
  else
    terms_[d] = c;
}

Rational LaurentX::coefficient(int d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentX::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentX::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

LaurentX& LaurentX::operator+=(const LaurentX& o) {
  for (const auto& [d, c] : o.terms_) set(d, coefficient(d) + c);
  return *this;
}

LaurentX& LaurentX::operator-=(const LaurentX& o) {
  for (const auto& [d, c] : o.terms_) set(d, coefficient(d) - c);
  return *this;
}

LaurentX& LaurentX::operator*=(const LaurentX& o) {
  std::map<int, Rational> out;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) out[d1 + d2] += c1 * c2;
  terms_.clear();
  for (const auto& [d, c] : out)
    if (c != 0) terms_.emplace(d, c);
  return *this;
}

LaurentX& LaurentX::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= s;
  return *this;
}

LaurentX LaurentX::pow(unsigned n) const {
  LaurentX result(Rational(1));
  LaurentX base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentX LaurentX::shifted(int shift) const {
  LaurentX r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d + shift, c);
  return r;
}

LaurentX laurent_from_z_poly(const Polynomial& p) {
  // Horner in the Laurent ring
  LaurentX acc;
  const LaurentX z = LaurentX::z();
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + LaurentX(*it);
  return acc;
}

LaurentX laurent_diff_z(const LaurentX& a) {
  // d/dz X^d = d X^(d-1) * dX/dz = -d X^(d-2)
  LaurentX r;
  for (const auto& [d, c] : a.terms()) {
    if (d == 0) continue;
    r += LaurentX::monomial(d - 2, c * Rational(-d));
  }
  return r;
}

std::optional<LaurentX> divide_exact(const LaurentX& num, const LaurentX& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (num.is_zero()) return LaurentX();
  const int num_lo = num.min_exponent();
  const int den_lo = den.min_exponent();
  std::vector<Rational> n(static_cast<std::size_t>(num.max_exponent() - num_lo + 1), Rational(0));
  std::vector<Rational> d(static_cast<std::size_t>(den.max_exponent() - den_lo + 1), Rational(0));
  for (const auto& [e, c] : num.terms()) n[static_cast<std::size_t>(e - num_lo)] = c;
  for (const auto& [e, c] : den.terms()) d[static_cast<std::size_t>(e - den_lo)] = c;
  if (n.size() < d.size()) return std::nullopt;

  const std::size_t qlen = n.size() - d.size() + 1;
  std::vector<Rational> q(qlen, Rational(0));
  for (std::size_t step = qlen; step-- > 0;) {
    const std::size_t top = step + d.size() - 1;
    if (n[top] == 0) continue;
    q[step] = n[top] / d.back();
    for (std::size_t i = 0; i < d.size(); ++i) n[step + i] -= q[step] * d[i];
  }
  for (const auto& r : n)
    if (r != 0) return std::nullopt;

  LaurentX out;
  for (std::size_t i = 0; i < qlen; ++i)
    if (q[i] != 0) out += LaurentX::monomial(static_cast<int>(i) + num_lo - den_lo, q[i]);
  return out;
}

LaurentX over_one_plus_x(const LaurentX& num, unsigned power) {
  const LaurentX one_minus_x = LaurentX(Rational(1)) - LaurentX::monomial(1);
  const LaurentX one_minus_x2 = LaurentX(Rational(1)) - LaurentX::monomial(2);
  auto q = divide_exact(num * one_minus_x.pow(power), one_minus_x2.pow(power));
  if (!q)
    throw std::domain_error("over_one_plus_x: denominator is not a pure power of X after cancellation");
  return *q;
}

Rational coeff_x_power(int d, long n) {
  if (n < 0) return 0;
  if (d % 2 == 0) {
    const long half = d / 2;
    if (half >= 0) {
      // (1-2z)^half: polynomial
      BigInt c = binomial(half, n) * pow2(n);
      return Rational(n % 2 == 0 ? c : BigInt(-c));
    }
    // (1-2z)^(-j) = sum 2^n binom(n+j-1, j-1) z^n
    const long j = -half;
    return Rational(pow2(n) * binomial(n + j - 1, j - 1));
  }
  // (-2)^n binom(d/2, n) = (-1)^n prod_{i<n} (d - 2i) / n!
  BigInt prod = 1;
  for (long i = 0; i < n; ++i) prod *= (static_cast<long>(d) - 2 * i);
  if (n % 2 == 1) prod = -prod;
  return make_rational(prod, factorial(n));
}

Rational extract_coeff_exact(const LaurentX& a, long n) {
  Rational acc = 0;
  for (const auto& [d, c] : a.terms()) acc += c * coeff_x_power(d, n);
  return acc;
}

Rational extract_coeff_lemma(int d, long n) {
  if (d >= 0 && d % 2 == 0) return 0;
  if (d >= 0) {
    const long k = (d - 1) / 2;
    Rational r = double_factorial_ext(2 * k + 1) * double_factorial_ext(2 * n - 2 * k - 3) / Rational(factorial(n));
    return (k % 2 == 0) ? Rational(-r) : r;  // (-1)^(k+1)
  }
  if (d % 2 == 0) {
    const long k = -d / 2;
    return Rational(pow2(n) * binomial(n + k - 1, k - 1));
  }
  const long k = (1 - static_cast<long>(d)) / 2;
  return double_factorial_ext(2 * n + 2 * k - 3) / (double_factorial_ext(2 * k - 3) * Rational(factorial(n)));
}

long lemma_threshold(int d, long n_max) {
  long n0 = n_max + 1;
  for (long n = n_max; n >= 0; --n) {
    if (extract_coeff_lemma(d, n) != coeff_x_power(d, n)) break;
    n0 = n;
  }
  return n0;
}

EgfSeries laurent_to_series(const LaurentX& a, int order) {
  if (order < 0) throw std::invalid_argument("laurent_to_series: negative order");
  EgfSeries s(order);
  for (int l = 0; l <= order; ++l) s[l] = extract_coeff_exact(a, l);
  return s;
}

LaurentX fit_laurent(const EgfSeries& s, int d_min, int d_max) {
  if (d_max < d_min) throw std::invalid_argument("fit_laurent: empty exponent range");
  const int unknowns = d_max - d_min + 1;
  const int rows = s.order() + 1;
  if (rows < unknowns) throw std::invalid_argument("fit_laurent: series too short for exponent range");

  // augmented system: row l reads sum_d a_d [z^l]X^d = s_l
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows),
                                       std::vector<Rational>(static_cast<std::size_t>(unknowns) + 1));
  for (int l = 0; l < rows; ++l) {
    for (int j = 0; j < unknowns; ++j) m[l][j] = coeff_x_power(d_min + j, l);
    m[l][unknowns] = s[l];
  }

  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < unknowns && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    const Rational inv = Rational(1) / m[rank][col];
    for (int c = col; c <= unknowns; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c <= unknowns; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != unknowns) throw std::domain_error("fit_laurent: exponent basis not independent on this order");
  for (int r = rank; r < rows; ++r)
    if (m[r][unknowns] != 0)
      throw std::domain_error("fit_laurent: no Laurent polynomial with exponents in [" + std::to_string(d_min) +
                              ", " + std::to_string(d_max) + "] matches the series");

  LaurentX out;
  for (int i = 0; i < rank; ++i) out += LaurentX::monomial(d_min + pivot_col[i], m[i][unknowns]);
  return out;
}

}  // namespace phylocount::genfun
