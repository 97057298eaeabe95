#pragma once

#include <initializer_list>
#include <vector>

#include "phylocount/numeric.hpp"

namespace phylocount::genfun {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending order. Trailing zeros are trimmed so degree() is exact.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& s, Polynomial p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
  static Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace phylocount::genfun
