#include "phylocount/galled/galled.hpp"

#include <mpfr.h>

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "phylocount/onecomp/onecomp.hpp"

namespace phylocount::galled {

using genfun::laurent_from_z_poly;
using genfun::Polynomial;

const char* method_name(Method m) {
  switch (m) {
    case Method::Series: return "series";
    case Method::ClosedForm: return "closed";
    case Method::TreeSum: return "treesum";
    case Method::BruteForce: return "brute";
  }
  return "?";
}

namespace {

// Calls f(parts) for every composition of `total` into `j` nonnegative parts.
void for_each_composition(int total, int j, std::vector<int>& parts, const std::function<void()>& f) {
  if (static_cast<int>(parts.size()) == j - 1) {
    parts.push_back(total);
    f();
    parts.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    parts.push_back(a);
    for_each_composition(total - a, j, parts, f);
    parts.pop_back();
  }
}

// sum_{j=1..k} F_j/j! sum over compositions of prod E_{l_i}, for any ring T.
template <class T, class GetE, class GetF>
T ek_recurrence(int k, const T& one, GetE e, GetF f) {
  T total = one * Rational(0);
  for (int j = 1; j <= k; ++j) {
    T inner = one * Rational(0);
    std::vector<int> parts;
    for_each_composition(k - j, j, parts, [&] {
      T prod = one;
      for (int p : parts) prod = prod * e(p);
      inner += prod;
    });
    total += f(j) * inner * Rational(1, factorial(j));
  }
  return total;
}

}  // namespace

EgfSeries ek_series(int k, int order) {
  if (k < 0 || order < 0) throw std::invalid_argument("ek_series: need k >= 0 and order >= 0");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, EgfSeries> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({k, order});
    if (it != memo.end()) return it->second;
  }
  EgfSeries result(order);
  if (k == 0) {
    result = onecomp::fk_series(0, order);
  } else {
    EgfSeries one(order);
    one[0] = 1;
    result = ek_recurrence<EgfSeries>(
        k, one, [order](int p) { return ek_series(p, order); },
        [order](int j) { return onecomp::fk_series(j, order); });
  }
  std::lock_guard lock(mutex);
  return memo.emplace(std::pair{k, order}, std::move(result)).first->second;
}

const LaurentX& ek_laurent(int k) {
  if (k < 0) throw std::invalid_argument("ek_laurent: negative k");
  static std::recursive_mutex mutex;
  static std::map<int, LaurentX> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  LaurentX v = k == 0 ? onecomp::fk_laurent(0)
                      : ek_recurrence<LaurentX>(
                            k, LaurentX(Rational(1)), [](int p) { return ek_laurent(p); },
                            [](int j) { return onecomp::fk_laurent(j); });
  return cache.emplace(k, std::move(v)).first->second;
}

BigInt gn_count(long l, int k) {
  if (l < 0) return 0;
  return require_integral(genfun::extract_coeff_exact(ek_laurent(k), l) * Rational(factorial(l)),
                          "GN(" + std::to_string(l) + "," + std::to_string(k) + ")");
}

Rational gn_closed2(long l) {
  const Rational a = Rational(6 * l * l * l * l + 31 * l * l * l + 30 * l * l - 7 * l - 9) / 3 * double_factorial_ext(2 * l - 3);
  const Rational b = pow2_q(l - 2) * Rational(7 * l + 10) * Rational(factorial(l + 1));
  return a - b;
}

Rational gn_closed3(long l) {
  const long l2 = l * l, l3 = l2 * l, l4 = l3 * l, l5 = l4 * l, l6 = l5 * l;
  const Rational a = Rational(140 * l6 + 3184 * l5 + 17195 * l4 + 34125 * l3 + 19475 * l2 - 8599 * l - 6090) / 105 *
                     double_factorial_ext(2 * l - 3);
  const Rational b = pow2_q(l - 5) * Rational(225 * l3 + 2045 * l2 + 5878 * l + 5448) / 3 * Rational(factorial(l + 1));
  return a - b;
}

long gn_closed_threshold(int k, long l_max) {
  if (k != 2 && k != 3) throw std::invalid_argument("gn_closed_threshold: k must be 2 or 3");
  const EgfSeries s = ek_series(k, static_cast<int>(l_max));
  long l0 = l_max + 1;
  for (long l = l_max; l >= 1; --l) {
    const Rational closed = k == 2 ? gn_closed2(l) : gn_closed3(l);
    if (closed != s[static_cast<int>(l)] * Rational(factorial(l))) break;
    l0 = l;
  }
  return l0;
}

LaurentX e1_published() {
  const LaurentX X = LaurentX::monomial(1);
  return LaurentX::z() * (LaurentX(Rational(1)) - X) * LaurentX::monomial(-3);
}

LaurentX e2_published() {
  const LaurentX p = laurent_from_z_poly(Polynomial{21, -36, 17, -18, 12});
  const LaurentX q = laurent_from_z_poly(Polynomial{-21, 15, -10, 12});
  return (p + q * LaurentX::monomial(1)) * LaurentX::monomial(-7, Rational(1, 3));
}

IdentityReport gzv_identity_check(const std::vector<EgfSeries>& e, int T) {
  const int K = static_cast<int>(e.size()) - 1;
  if (K < 0) throw std::invalid_argument("gzv_identity_check: empty G");
  // Coefficients of v^0..v^K; vG shifts by one.
  using Bivariate = std::vector<EgfSeries>;
  auto zero = [K, T] { return Bivariate(static_cast<std::size_t>(K) + 1, EgfSeries(T)); };
  auto mul = [&](const Bivariate& a, const Bivariate& b) {
    Bivariate c = zero();
    for (int i = 0; i <= K; ++i)
      for (int j = 0; i + j <= K; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  Bivariate vg = zero();
  for (int i = 0; i < K; ++i) vg[i + 1] = e[i].truncated(T);
  Bivariate power = zero();
  power[0][0] = 1;
  Bivariate rhs = zero();
  for (int j = 0; j <= K; ++j) {
    const EgfSeries fj = onecomp::fk_series(j, T) * Rational(1, factorial(j));
    for (int i = 0; i <= K; ++i) rhs[i] += fj * power[i];
    power = mul(power, vg);
  }
  IdentityReport rep;
  for (int i = 0; i <= K; ++i)
    for (int l = 0; l <= T; ++l)
      if (rhs[i][l] != e[i][l]) {
        rep.ok = false;
        rep.detail = "[v^" + std::to_string(i) + " z^" + std::to_string(l) + "]: G has " + e[i][l].get_str() +
                     ", right-hand side " + rhs[i][l].get_str();
        return rep;
      }
  return rep;
}

IdentityReport gzv_identity_check(int K, int T) {
  std::vector<EgfSeries> e;
  for (int k = 0; k <= K; ++k) e.push_back(ek_series(k, T));
  return gzv_identity_check(e, T);
}

namespace {

using KPoly = std::vector<BigInt>;  // coefficient of v^k

KPoly poly_mul(const KPoly& a, const KPoly& b) {
  KPoly c(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void poly_add(KPoly& a, const KPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

// Weight of one internal vertex with c children, `leaf` of them leaves.
KPoly vertex_weight(int c, int leaf) {
  const int nonleaf = c - leaf;
  KPoly w(static_cast<std::size_t>(c) + 1, BigInt(0));
  for (int j = 0; j <= leaf; ++j) w[nonleaf + j] += binomial(leaf, j) * onecomp::M(c, nonleaf + j);
  return w;
}

// Sum over trees on the leaf set `mask` (at least two leaves) of the vertex
// weights. The root's children partition the set into >= 2 blocks; the block
// containing the lowest leaf is chosen first so every partition appears once.
KPoly subtree_sum(unsigned mask, std::map<unsigned, KPoly>& memo) {
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  KPoly total;
  std::vector<unsigned> blocks;
  std::function<void(unsigned)> partition = [&](unsigned rest) {
    if (rest == 0) {
      if (blocks.size() < 2) return;
      int leaf = 0;
      KPoly prod{BigInt(1)};
      for (unsigned b : blocks) {
        if ((b & (b - 1)) == 0) {
          ++leaf;
        } else {
          prod = poly_mul(prod, subtree_sum(b, memo));
        }
      }
      poly_add(total, poly_mul(prod, vertex_weight(static_cast<int>(blocks.size()), leaf)));
      return;
    }
    const unsigned low = rest & (~rest + 1);
    const unsigned others = rest & ~low;
    for (unsigned sub = others;; sub = (sub - 1) & others) {
      blocks.push_back(low | sub);
      partition(rest & ~(low | sub));
      blocks.pop_back();
      if (sub == 0) break;
    }
  };
  partition(mask);
  memo.emplace(mask, total);
  return total;
}

}  // namespace

std::vector<BigInt> gn_tree_sum_by_k(int l) {
  if (l < 1 || l > kTreeSumMaxLeaves)
    throw std::invalid_argument("gn_tree_sum: l must lie in [1, " + std::to_string(kTreeSumMaxLeaves) + "]");
  if (l == 1) return {BigInt(1)};
  std::map<unsigned, KPoly> memo;
  KPoly w = subtree_sum((1u << l) - 1, memo);
  w.resize(static_cast<std::size_t>(2 * l - 1), BigInt(0));
  return w;
}

BigInt gn_tree_sum(int l) {
  BigInt s = 0;
  for (const auto& x : gn_tree_sum_by_k(l)) s += x;
  return s;
}

LogValue asympt_gn(long l, int k) {
  if (l < 1 || k < 0) throw std::invalid_argument("asympt_gn: need l >= 1, k >= 0");
  const double L = static_cast<double>(l);
  return LogValue::from_log((k - 1) * std::log(2.0) + 0.5 * std::log(2.0) - std::lgamma(k + 1.0) + L * (std::log(2.0) - 1.0) +
                            (L + 2.0 * k - 1.0) * std::log(L));
}

double asympt_ratio(const BigInt& exact, long l, int k) {
  if (exact <= 0) return 0;
  return std::exp(log_abs(exact) - asympt_gn(l, k).log_value);
}

GammaReport gamma_identity_check(int k_max, double tolerance) {
  GammaReport rep;
  constexpr mpfr_prec_t prec = 256;
  mpfr_t g, rhs, sqrt_pi, err;
  mpfr_inits2(prec, g, rhs, sqrt_pi, err, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(sqrt_pi, MPFR_RNDN);
  mpfr_sqrt(sqrt_pi, sqrt_pi, MPFR_RNDN);
  for (int k = 1; k <= k_max; ++k) {
    mpfr_set_d(g, 2.0 * k - 0.5, MPFR_RNDN);
    mpfr_gamma(g, g, MPFR_RNDN);
    const BigInt df = double_factorial(4 * k - 3);
    mpfr_set_z(rhs, df.get_mpz_t(), MPFR_RNDN);
    mpfr_mul(rhs, rhs, sqrt_pi, MPFR_RNDN);
    mpfr_mul_2si(rhs, rhs, -2 * k + 1, MPFR_RNDN);
    mpfr_sub(err, g, rhs, MPFR_RNDN);
    mpfr_div(err, err, rhs, MPFR_RNDN);
    mpfr_abs(err, err, MPFR_RNDN);
    const double e = mpfr_get_d(err, MPFR_RNDN);
    rep.max_relative_error = std::max(rep.max_relative_error, e);
    if (!(e <= tolerance)) rep.ok = false;
  }
  mpfr_clears(g, rhs, sqrt_pi, err, static_cast<mpfr_ptr>(nullptr));
  return rep;
}

}  // namespace phylocount::galled
