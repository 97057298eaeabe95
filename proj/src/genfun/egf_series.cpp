#include "phylocount/genfun/egf_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace phylocount::genfun {

EgfSeries::EgfSeries(int order) {
  if (order < 0) throw std::invalid_argument("EgfSeries: negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

EgfSeries::EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("EgfSeries: empty coefficient array");
}

EgfSeries EgfSeries::from_counts(const std::vector<BigInt>& counts) {
  std::vector<Rational> c;
  c.reserve(counts.size());
  BigInt fact = 1;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    if (l > 0) fact *= static_cast<unsigned long>(l);
    c.push_back(make_rational(counts[l], fact));
  }
  return EgfSeries(std::move(c));
}

BigInt EgfSeries::count(int l) const {
  Rational v = (*this)[l] * Rational(factorial(l));
  return require_integral(v, "l! [z^l] of series at l=" + std::to_string(l));
}

EgfSeries EgfSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("EgfSeries::truncated: cannot extend order");
  return EgfSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

EgfSeries& EgfSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
  const int order = std::min(a.order(), b.order());
  EgfSeries out(order);
  // skip leading zeros; most factors here vanish at z = 0
  int lo_a = 0, lo_b = 0;
  while (lo_a <= order && a[lo_a] == 0) ++lo_a;
  while (lo_b <= order && b[lo_b] == 0) ++lo_b;
  Rational tmp;
  for (int i = lo_a; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = lo_b; i + j <= order; ++j) {
      tmp = a[i] * b[j];
      out[i + j] += tmp;
    }
  }
  return out;
}

EgfSeries series_add(const EgfSeries& a, const EgfSeries& b) { return a + b; }
EgfSeries series_mul(const EgfSeries& a, const EgfSeries& b) { return a * b; }
EgfSeries series_scale(const EgfSeries& a, const Rational& s) { return a * s; }

EgfSeries series_diff_z(const EgfSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("series_diff_z: negative derivative order");
  if (k > a.order()) throw std::invalid_argument("series_diff_z: derivative order exceeds truncation order");
  EgfSeries out(a.order() - k);
  for (int l = 0; l <= out.order(); ++l) {
    // d^k/dz^k z^(l+k) = (l+k)!/l! z^l
    BigInt falling = 1;
    for (int i = l + 1; i <= l + k; ++i) falling *= i;
    out[l] = a[l + k] * Rational(falling);
  }
  return out;
}

}  // namespace phylocount::genfun
