#pragma once

// Finite Laurent polynomials in X = sqrt(1 - 2z).
//
// Every closed-form generating function in this project is a finite sum
// sum_d a_d X^d with rational a_d. Since X^2 = 1 - 2z, polynomials in z embed
// via z = (1 - X^2)/2, differentiation follows from dX/dz = -1/X, and
// coefficients come from the generalized binomial expansion of (1-2z)^(d/2).

#include <map>
#include <optional>

#include "phylocount/genfun/egf_series.hpp"
#include "phylocount/genfun/polynomial.hpp"
#include "phylocount/numeric.hpp"

namespace phylocount::genfun {

class LaurentX {
 public:
  LaurentX() = default;
  /// Constant c.
  LaurentX(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * X^d
  static LaurentX monomial(int d, const Rational& c = 1);
  /// The variable z = (1 - X^2)/2.
  static LaurentX z();

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int d) const;
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  LaurentX& operator+=(const LaurentX& o);
  LaurentX& operator-=(const LaurentX& o);
  LaurentX& operator*=(const LaurentX& o);
  LaurentX& operator*=(const Rational& s);

  friend LaurentX operator+(LaurentX a, const LaurentX& b) { return a += b; }
  friend LaurentX operator-(LaurentX a, const LaurentX& b) { return a -= b; }
  friend LaurentX operator*(LaurentX a, const LaurentX& b) { return a *= b; }
  friend LaurentX operator*(LaurentX a, const Rational& s) { return a *= s; }
  friend LaurentX operator*(const Rational& s, LaurentX a) { return a *= s; }
  friend LaurentX operator-(LaurentX a) { return a *= Rational(-1); }
  friend bool operator==(const LaurentX& a, const LaurentX& b) { return a.terms_ == b.terms_; }

  LaurentX pow(unsigned n) const;
  /// Multiply by X^shift.
  LaurentX shifted(int shift) const;

 private:
  void set(int d, const Rational& c);
  std::map<int, Rational> terms_;
};

/// Image of a polynomial in z under z -> (1 - X^2)/2.
LaurentX laurent_from_z_poly(const Polynomial& p);

/// d/dz, realized as -X^{-1} d/dX.
LaurentX laurent_diff_z(const LaurentX& a);

/// Exact quotient num/den when den divides num in the ring of Laurent
/// polynomials in X; std::nullopt otherwise. den must be nonzero.
std::optional<LaurentX> divide_exact(const LaurentX& num, const LaurentX& den);

/// Rewrites num / (1 + X)^power as a Laurent polynomial by multiplying with
/// (1 - X)^power and cancelling (1 - X^2)^power = (2z)^power. Throws
/// std::domain_error if the cancellation leaves a denominator that is not a
/// power of X.
LaurentX over_one_plus_x(const LaurentX& num, unsigned power);

/// [z^n] X^d = (-2)^n binom(d/2, n), valid for every n >= 0.
Rational coeff_x_power(int d, long n);

/// Exact [z^n] of a, summing coeff_x_power over its terms.
Rational extract_coeff_exact(const LaurentX& a, long n);

/// The four-case asymptotic coefficient formula for [z^n] X^d (even/odd d,
/// sign of d), evaluated verbatim with the continued double factorial. It
/// only agrees with extract_coeff_exact from some threshold n on; see
/// lemma_threshold.
Rational extract_coeff_lemma(int d, long n);

/// Smallest n0 such that extract_coeff_lemma(d, n) equals the exact
/// coefficient for every n in [n0, n_max]. Returns n_max + 1 if even n_max
/// disagrees.
long lemma_threshold(int d, long n_max);

/// Truncated expansion with coefficients extract_coeff_exact(a, l), l <= T.
EgfSeries laurent_to_series(const LaurentX& a, int order);

/// Finds the unique Laurent polynomial with exponents in [d_min, d_max] whose
/// expansion matches `s` through s.order(). Throws std::domain_error when no
/// such polynomial exists.
LaurentX fit_laurent(const EgfSeries& s, int d_min, int d_max);

}  // namespace phylocount::genfun
