#pragma once

#include <vector>

#include "phylocount/numeric.hpp"

namespace phylocount::genfun {

/// Truncated exponential generating function sum_{l<=T} c_l z^l. The counting
/// sequence it represents is l! * c_l.
///
/// Arithmetic never extends the truncation order: binary operations keep the
/// smaller order of their operands.
class EgfSeries {
 public:
  /// Zero series of order `order`.
  explicit EgfSeries(int order = 0);
  explicit EgfSeries(std::vector<Rational> coeffs);

  /// Series whose l-th coefficient is counts[l] / l!.
  static EgfSeries from_counts(const std::vector<BigInt>& counts);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](int l) const { return coeffs_.at(static_cast<std::size_t>(l)); }
  Rational& operator[](int l) { return coeffs_.at(static_cast<std::size_t>(l)); }

  /// l! * c_l; throws std::domain_error when that is not an integer.
  BigInt count(int l) const;

  EgfSeries truncated(int order) const;

  EgfSeries& operator+=(const EgfSeries& o);
  EgfSeries& operator-=(const EgfSeries& o);
  EgfSeries& operator*=(const Rational& s);

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator*(EgfSeries a, const Rational& s) { return a *= s; }
  friend EgfSeries operator*(const Rational& s, EgfSeries a) { return a *= s; }
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

EgfSeries series_add(const EgfSeries& a, const EgfSeries& b);
EgfSeries series_mul(const EgfSeries& a, const EgfSeries& b);
EgfSeries series_scale(const EgfSeries& a, const Rational& s);

/// k-fold formal derivative d^k/dz^k; the result has order T - k.
/// Throws std::invalid_argument when k < 0 or k > T.
EgfSeries series_diff_z(const EgfSeries& a, int k);

}  // namespace phylocount::genfun
