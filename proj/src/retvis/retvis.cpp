#include "phylocount/retvis/retvis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "phylocount/netcore/canonical.hpp"
#include "phylocount/onecomp/onecomp.hpp"

namespace phylocount::retvis {

using netcore::DagPattern;

namespace {

// Every way to give a new sink weighted indegree 2 from vertices 0..n-1.
std::vector<std::vector<std::pair<int, int>>> sink_attachments(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int u = 0; u < n; ++u) out.push_back({{u, 2}});
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) out.push_back({{u, 1}, {w, 1}});
  return out;
}

PatternCatalog build_catalog(int m, bool reversed) {
  std::map<std::string, DagPattern> level;
  DagPattern single;
  single.m = 1;
  level.emplace(netcore::canonical_code(single), single);
  for (int size = 1; size < m; ++size) {
    std::map<std::string, DagPattern> next;
    auto options = sink_attachments(size);
    if (reversed) std::reverse(options.begin(), options.end());
    std::vector<const DagPattern*> states;
    for (const auto& [code, p] : level) states.push_back(&p);
    if (reversed) std::reverse(states.begin(), states.end());
    for (const DagPattern* p : states)
      for (const auto& att : options) {
        DagPattern q = *p;
        q.m = size + 1;
        for (auto [u, k] : att) q.mult[{u, size}] = k;
        next.try_emplace(netcore::canonical_code(q), std::move(q));
      }
    level = std::move(next);
  }
  PatternCatalog cat;
  cat.m = m;
  for (auto& [code, p] : level) {
    std::string why;
    if (!netcore::is_valid_pattern(p, &why)) throw std::logic_error("enumerate_dm produced an invalid pattern: " + why);
    cat.patterns.push_back({p, netcore::automorphism_count(p), code});
  }
  return cat;
}

void check_m(int m) {
  if (m < 2 || m > 8) throw std::invalid_argument("enumerate_dm: m must lie in [2, 8]");
}

// The single-vertex catalog (k = 0) is used by the pattern sums only.
const PatternCatalog& catalog(int m) {
  if (m < 1 || m > 8) throw std::invalid_argument("pattern sum: k + 1 must lie in [1, 8]");
  static std::mutex mutex;
  static std::map<int, PatternCatalog> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_catalog(m, false)).first;
  return it->second;
}

}  // namespace

const PatternCatalog& enumerate_dm(int m) {
  check_m(m);
  return catalog(m);
}

PatternCatalog enumerate_dm_reversed(int m) {
  check_m(m);
  return build_catalog(m, true);
}

int child_count(const DagPattern& p, int v) { return static_cast<int>(p.children(v).size()); }

int double_child_count(const DagPattern& p, int v) { return p.double_children(v); }

EgfSeries vertex_gf(const DagPattern& p, int v, int order) {
  const int c = child_count(p, v), c1 = double_child_count(p, v);
  const int l0 = c1 == 0 ? 1 : 0;
  std::vector<BigInt> counts(static_cast<std::size_t>(order) + 1, BigInt(0));
  for (int l = l0; l <= order; ++l) counts[l] = onecomp::M(l + c, c1);
  return EgfSeries::from_counts(counts);
}

LaurentX vertex_gf_laurent(const DagPattern& p, int v) {
  const int c = child_count(p, v), c1 = double_child_count(p, v);
  LaurentX f = onecomp::mk_laurent(c1);
  for (int i = 0; i < c; ++i) f = genfun::laurent_diff_z(f);
  if (c1 == 0) f -= LaurentX(Rational(onecomp::M(c, c1)));
  return f;
}

EgfSeries pattern_sum_series(int k, int order) {
  const auto& cat = catalog(k + 1);
  EgfSeries total(order);
  for (const auto& e : cat.patterns) {
    EgfSeries prod(order);
    prod[0] = 1;
    for (int v = 0; v < e.pattern.m; ++v) prod = prod * vertex_gf(e.pattern, v, order);
    total += prod * Rational(1, e.automorphisms);
  }
  return total;
}

LaurentX pattern_sum_laurent(int k) {
  const auto& cat = catalog(k + 1);
  LaurentX total;
  for (const auto& e : cat.patterns) {
    LaurentX prod(Rational(1));
    for (int v = 0; v < e.pattern.m; ++v) prod *= vertex_gf_laurent(e.pattern, v);
    total += prod * Rational(1, e.automorphisms);
  }
  return total;
}

BigInt rv_series_count(int l, int k, int order) {
  if (l < 0) throw std::invalid_argument("rv_series_count: negative l");
  if (order < l) order = l;
  Rational v = pattern_sum_series(k, order)[l] * Rational(factorial(l));
  return require_integral(v, "weighted pattern sum for RV(" + std::to_string(l) + "," + std::to_string(k) + ")");
}

BigInt rv_count(long l, int k) {
  if (l < 0) return 0;
  static std::mutex mutex;
  static std::map<int, LaurentX> cache;
  LaurentX f;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, pattern_sum_laurent(k)).first;
    f = it->second;
  }
  return require_integral(genfun::extract_coeff_exact(f, l) * Rational(factorial(l)),
                          "RV(" + std::to_string(l) + "," + std::to_string(k) + ")");
}

Rational rv_closed2(long l) {
  const Rational a = Rational(6 * l * l * l * l + 7 * l * l * l + 6 * l * l - l - 3) / 3 * double_factorial_ext(2 * l - 3);
  const Rational b = pow2_q(l - 1) * Rational(2 * l * l + 2 * l + 1) * Rational(factorial(l));
  return a - b;
}

Rational rv_closed3(long l) {
  const long l2 = l * l, l3 = l2 * l, l4 = l3 * l, l5 = l4 * l, l6 = l5 * l;
  const Rational a =
      Rational(4 * l6 + 20 * l5 + 33 * l4 - 32 * l3 - 76 * l2 + 12 * l + 12) / 3 * double_factorial_ext(2 * l - 3);
  const Rational b =
      pow2_q(l - 4) * Rational(48 * l4 + 175 * l3 + 99 * l2 - 262 * l - 264) / 3 * Rational(factorial(l));
  return a - b;
}

long rv_closed_threshold(int k, long l_max) {
  if (k != 2 && k != 3) throw std::invalid_argument("rv_closed_threshold: k must be 2 or 3");
  const EgfSeries s = pattern_sum_series(k, static_cast<int>(l_max));
  long l0 = l_max + 1;
  for (long l = l_max; l >= 1; --l) {
    const Rational closed = k == 2 ? rv_closed2(l) : rv_closed3(l);
    if (closed != s[static_cast<int>(l)] * Rational(factorial(l))) break;
    l0 = l;
  }
  return l0;
}

LaurentX rv2_published() {
  const LaurentX one(Rational(1)), X = LaurentX::monomial(1);
  return (one - X).pow(2) *
         (LaurentX(Rational(15)) + LaurentX::monomial(2, -6) + LaurentX::monomial(4) + LaurentX::monomial(6, 2)) *
         LaurentX::monomial(-7, Rational(1, 8));
}

namespace {

LaurentX fa_form(int last) {
  using genfun::laurent_from_z_poly;
  using genfun::over_one_plus_x;
  using genfun::Polynomial;
  const LaurentX t1 =
      laurent_from_z_poly(Polynomial{0, 0, 0, 116, 48, 116, -148, 144, Rational(4 * last)}) * LaurentX::monomial(-11);
  const LaurentX t2 = laurent_from_z_poly(Polynomial{0, 0, 0, 18, -6, 42, -24}) * LaurentX::monomial(-10);
  const LaurentX t3 = laurent_from_z_poly(Polynomial{0, 0, 0, 0, 2}) * LaurentX::monomial(-9);
  return over_one_plus_x(t1, 3) + over_one_plus_x(t2, 2) + over_one_plus_x(t3, 1);
}

LaurentX fb_form(const int (&c)[9]) {
  const LaurentX one(Rational(1)), X = LaurentX::monomial(1);
  LaurentX p;
  for (int d = 0; d <= 8; ++d) p += LaurentX::monomial(d, c[d]);
  return (one - X).pow(2) * p * LaurentX::monomial(-10, Rational(1, 8));
}

}  // namespace

// The z^8 numerator coefficient is 4 * (-14) as printed.
LaurentX fa_published() { return fa_form(-14); }
LaurentX fa_corrected() { return fa_form(-16); }

LaurentX fb_published() {
  const int c[] = {258, -105, -153, -16, 26, 7, 3, -2, -2};
  return fb_form(c);
}

LaurentX fb_corrected() {
  const int c[] = {258, -105, -153, -16, 14, 7, 7, -2, -2};
  return fb_form(c);
}

FaFbReport fa_fb_check(int order, bool published) {
  FaFbReport rep;
  const auto& cat = enumerate_dm(4);
  EgfSeries fa(order), fb(order);
  for (const auto& e : cat.patterns) {
    EgfSeries prod(order);
    prod[0] = 1;
    for (int v = 0; v < e.pattern.m; ++v) prod = prod * vertex_gf(e.pattern, v, order);
    prod *= Rational(1, e.automorphisms);
    if (e.pattern.is_tree_shaped()) {
      fa += prod;
      ++rep.tree_patterns;
    } else {
      fb += prod;
      ++rep.other_patterns;
    }
  }
  auto compare = [&rep, order](const EgfSeries& got, const LaurentX& want, const char* name) {
    const EgfSeries w = genfun::laurent_to_series(want, order);
    for (int l = 0; l <= order; ++l)
      if (got[l] != w[l]) {
        rep.ok = false;
        rep.detail += std::string(name) + " differs at z^" + std::to_string(l) + ": pattern sum " + got[l].get_str() +
                      ", closed form " + w[l].get_str() + "\n";
        return;
      }
  };
  compare(fa, published ? fa_published() : fa_corrected(), "f_A");
  compare(fb, published ? fb_published() : fb_corrected(), "f_B");
  return rep;
}

}  // namespace phylocount::retvis
