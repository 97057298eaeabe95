#pragma once

// Galled networks. A galled network decompresses into a (non-binary) tree of
// one-component networks, which gives the functional equation
// G(z, v) = sum_j F_j(z) (v G(z, v))^j / j! for G = sum_k E_k(z) v^k.

#include <string>
#include <vector>

#include "phylocount/genfun/egf_series.hpp"
#include "phylocount/genfun/laurent.hpp"
#include "phylocount/numeric.hpp"

namespace phylocount::galled {

using genfun::EgfSeries;
using genfun::LaurentX;

enum class Method { Series, ClosedForm, TreeSum, BruteForce };

const char* method_name(Method m);

struct GalledCountResult {
  long l = 0;
  int k = 0;
  BigInt value;
  Method method = Method::Series;
};

/// E_k(z) = sum_l GN(l, k) z^l / l!, from E_0 = 1 - sqrt(1-2z) and
/// E_k = sum_{j=1..k} F_j/j! sum_{l_1+..+l_j = k-j} E_{l_1} ... E_{l_j}.
/// Memoized per (k, order).
EgfSeries ek_series(int k, int order);

/// The same recurrence evaluated in the Laurent algebra. Cached.
const LaurentX& ek_laurent(int k);

/// l! [z^l] E_k, via the Laurent form (cheap for large l).
BigInt gn_count(long l, int k);

/// Closed forms for k = 2 and k = 3, evaluated with (-1)!! = 1.
Rational gn_closed2(long l);
Rational gn_closed3(long l);

/// Smallest l0 >= 1 such that the closed form equals the series count for
/// every l in [l0, l_max]; l_max + 1 if it fails at l_max.
long gn_closed_threshold(int k, long l_max);

/// The printed closed forms of E_1 and E_2.
LaurentX e1_published();
LaurentX e2_published();

struct IdentityReport {
  bool ok = true;
  std::string detail;  // first offending coefficient
};

/// Checks G = sum_j F_j (vG)^j / j! modulo (v^{K+1}, z^{T+1}) for
/// G = sum_{k<=K} e[k] v^k, where e holds K+1 series of order >= T.
IdentityReport gzv_identity_check(const std::vector<EgfSeries>& e, int T);
IdentityReport gzv_identity_check(int K, int T);

inline constexpr int kTreeSumMaxLeaves = 7;

/// sum over (non-binary) leaf-labeled trees T of
/// prod_v sum_j binom(c_lf(v), j) M(c(v), c_nlf(v) + j), together with the
/// split by k = sum_v (c_nlf(v) + j). The trees are enumerated recursively
/// over set partitions of each vertex's leaf set into at least two blocks.
BigInt gn_tree_sum(int l);
std::vector<BigInt> gn_tree_sum_by_k(int l);

/// Main term 2^{k-1} sqrt(2)/k! (2/e)^l l^{l+2k-1}, evaluated in log space.
LogValue asympt_gn(long l, int k);

/// exact / asymptotic, computed through logarithms.
double asympt_ratio(const BigInt& exact, long l, int k);

struct GammaReport {
  bool ok = true;
  double max_relative_error = 0;
};

/// Gamma(2k - 1/2) = 2^{-2k+1} (4k-3)!! sqrt(pi) for 1 <= k <= k_max, checked
/// with 256-bit MPFR arithmetic against the tolerance.
GammaReport gamma_identity_check(int k_max, double tolerance = 1e-12);

}  // namespace phylocount::galled
