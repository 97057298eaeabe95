#include "phylocount/onecomp/onecomp.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace phylocount::onecomp {

using genfun::EgfSeries;
using genfun::LaurentX;
using genfun::Polynomial;

BigInt MTable::get(long l, long k) {
  if (l < 1 || k < 0 || k > l) return 0;
  {
    std::shared_lock lock(mutex_);
    if (l < static_cast<long>(rows_.size())) return rows_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
  }
  reserve(l);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
}

void MTable::reserve(long l_max) {
  std::unique_lock lock(mutex_);
  while (static_cast<long>(rows_.size()) <= l_max) fill_row(static_cast<long>(rows_.size()));
}

long MTable::filled_rows() const {
  std::shared_lock lock(mutex_);
  return static_cast<long>(rows_.size());
}

void MTable::fill_row(long l) {
  // caller holds the exclusive lock; rows_ has exactly l rows
  std::vector<BigInt> row(static_cast<std::size_t>(l) + 1, BigInt(0));
  auto at = [this, l, &row](long ll, long kk) -> BigInt {
    if (ll < 1 || kk < 0 || kk > ll) return 0;
    if (ll == l) return row[static_cast<std::size_t>(kk)];
    return rows_[static_cast<std::size_t>(ll)][static_cast<std::size_t>(kk)];
  };
  if (l >= 1) {
    row[0] = double_factorial(2 * l - 3);
    row[1] = BigInt(l - 1) * double_factorial(2 * l - 3);
    for (long k = 2; k <= l; ++k) {
      BigInt value = BigInt(l + k - 2) * row[static_cast<std::size_t>(k - 1)] +
                     BigInt(k - 1) * row[static_cast<std::size_t>(k - 2)];
      BigInt tail = 0;
      for (long d = 1; d <= k - 1; ++d)
        tail += binomial(k - 1, d) * double_factorial(2 * d - 1) * (at(l - d, k - 1 - d) - at(l + 1 - d, k - 1 - d));
      if (!mpz_even_p(tail.get_mpz_t()))
        throw std::logic_error("M recurrence: odd correction sum at l=" + std::to_string(l));
      value += tail / 2;
      if (value < 0) throw std::logic_error("M recurrence: negative value at l=" + std::to_string(l));
      row[static_cast<std::size_t>(k)] = value;
    }
  }
  rows_.push_back(std::move(row));
}

MTable& shared_m_table() {
  static MTable table;
  return table;
}

BigInt M(long l, long k) { return shared_m_table().get(l, k); }

BigInt OGN(long l, long k) { return binomial(l, k) * M(l, k); }

Polynomial pk_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("pk_polynomial: k must be >= 1");
  auto sample = [k](long l) -> Rational { return Rational(M(l, k)) / double_factorial_ext(2 * (l - k) - 3); };
  std::vector<Rational> xs, ys;
  for (long l = k; l <= 3L * k; ++l) {
    xs.emplace_back(l);
    ys.push_back(sample(l));
  }
  Polynomial p = Polynomial::interpolate(xs, ys);
  for (long l = 3L * k + 1; l <= 3L * k + 2L * k + 10; ++l)
    if (p(Rational(l)) != sample(l))
      throw std::logic_error("pk_polynomial: interpolant disagrees with M at l=" + std::to_string(l));
  if (p.degree() != 2 * k) throw std::logic_error("pk_polynomial: degree is not 2k");
  if (p.leading_coefficient() != Rational(pow2(k))) throw std::logic_error("pk_polynomial: leading coefficient is not 2^k");
  return p;
}

EgfSeries mk_series(int k, int order) {
  std::vector<BigInt> counts;
  for (int l = 0; l <= order; ++l) counts.push_back(M(l, k));
  return EgfSeries::from_counts(counts);
}

EgfSeries fk_series(int k, int order) {
  std::vector<BigInt> counts;
  for (int l = 0; l <= order; ++l) counts.push_back(M(l + k, k));
  EgfSeries f = EgfSeries::from_counts(counts);
  if (!(f == genfun::series_diff_z(mk_series(k, order + k), k)))
    throw std::logic_error("fk_series: F_k differs from the k-th derivative of M_k");
  return f;
}

namespace {

struct LaurentCache {
  std::mutex mutex;
  std::map<int, LaurentX> mk;
  std::map<int, LaurentX> fk;
};

LaurentCache& laurent_cache() {
  static LaurentCache cache;
  return cache;
}

LaurentX compute_mk_laurent(int k) {
  const int d_min = -(2 * k + 1);
  const int d_max = 2 * k + 1;
  const int order = 2 * (d_max - d_min + 1) + 16;
  LaurentX fit = genfun::fit_laurent(mk_series(k, order), d_min, d_max);
  const int check = order + 24;
  if (!(genfun::laurent_to_series(fit, check) == mk_series(k, check)))
    throw std::logic_error("mk_laurent: fitted closed form fails verification for k=" + std::to_string(k));
  return fit;
}

}  // namespace

const LaurentX& mk_laurent(int k) {
  if (k < 0) throw std::invalid_argument("mk_laurent: negative k");
  auto& cache = laurent_cache();
  std::lock_guard lock(cache.mutex);
  auto it = cache.mk.find(k);
  if (it == cache.mk.end()) it = cache.mk.emplace(k, compute_mk_laurent(k)).first;
  return it->second;
}

const LaurentX& fk_laurent(int k) {
  const LaurentX& m = mk_laurent(k);
  auto& cache = laurent_cache();
  std::lock_guard lock(cache.mutex);
  auto it = cache.fk.find(k);
  if (it == cache.fk.end()) {
    LaurentX f = m;
    for (int i = 0; i < k; ++i) f = genfun::laurent_diff_z(f);
    const int check = 40;
    if (!(genfun::laurent_to_series(f, check) == fk_series(k, check)))
      throw std::logic_error("fk_laurent: derivative of M_k closed form disagrees with F_k series");
    it = cache.fk.emplace(k, std::move(f)).first;
  }
  return it->second;
}

BaselineCounts baseline_counts(long l) {
  if (l < 1) throw std::invalid_argument("baseline_counts: l must be >= 1");
  BaselineCounts out;
  out.trees = double_factorial(2 * l - 3);
  BigInt k1 = BigInt(l) * double_factorial(2 * l - 1) - pow2(l - 1) * factorial(l);
  out.k1_count = k1 < 0 ? BigInt(0) : k1;
  Rational n2 = make_rational(BigInt(3 * l - 4) * BigInt(l * l + 11 * l + 6), 3) * Rational(double_factorial(2 * l - 1)) -
                Rational(pow2(l) * BigInt(l + 2) * BigInt(3 * l - 4) * factorial(l));
  out.n2 = require_integral(n2, "N(l,2)");
  return out;
}

}  // namespace phylocount::onecomp
