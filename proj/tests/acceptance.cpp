// Acceptance criteria. Each criterion prints one PASS/FAIL line followed by
// indented details; the exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "phylocount/galled/galled.hpp"
#include "phylocount/genfun/laurent.hpp"
#include "phylocount/netcore/canonical.hpp"
#include "phylocount/netcore/component_graph.hpp"
#include "phylocount/netcore/dag_pattern.hpp"
#include "phylocount/onecomp/onecomp.hpp"
#include "phylocount/oracle/appendix.hpp"
#include "phylocount/oracle/enumerate.hpp"
#include "phylocount/retvis/retvis.hpp"

using namespace phylocount;
using genfun::EgfSeries;
using genfun::LaurentX;

namespace {

// Oracles written independently of the library.

// n!! for odd n >= -1, extended downward by n!! = (n+2)!! / (n+2).
Rational dfact(long n) {
  if (n < -1) return dfact(n + 2) / (n + 2);
  Rational r = 1;
  for (long i = n; i > 1; i -= 2) r *= i;
  return r;
}

Rational fact(long n) {
  Rational r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational two_pow(long n) {
  Rational r = 1;
  for (long i = 0; i < n; ++i) r *= 2;
  for (long i = 0; i > n; --i) r /= 2;
  return r;
}

Rational trees(long l) { return dfact(2 * l - 3); }
Rational k1(long l) { return Rational(l) * dfact(2 * l - 1) - two_pow(l - 1) * fact(l); }
Rational normal2(long l) {
  return Rational((3 * l - 4) * (l * l + 11 * l + 6), 3) * dfact(2 * l - 1) - two_pow(l) * (l + 2) * (3 * l - 4) * fact(l);
}

// [z^n] (1 - 2z)^{d/2} from the binomial series.
Rational x_power_coeff(int d, long n) {
  const Rational a(d, 2);
  Rational c = 1;
  for (long i = 0; i < n; ++i) c *= (a - i) / (i + 1) * -2;
  return c;
}

// Series with coefficients counts(l) / l! for l in [from, order].
EgfSeries series_of(const std::function<BigInt(long)>& counts, long from, int order) {
  EgfSeries s(order);
  for (long l = from; l <= order; ++l) s[static_cast<int>(l)] = Rational(counts(l)) / fact(l);
  return s;
}

LaurentX X(int d, const Rational& c = 1) { return LaurentX::monomial(d, c); }

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { details.push_back(s); }
};

std::string str(const Rational& q) { return q.get_str(); }

std::string first_difference(const EgfSeries& a, const EgfSeries& b) {
  for (int l = 0; l <= std::min(a.order(), b.order()); ++l)
    if (a[l] != b[l]) return "z^" + std::to_string(l) + ": " + str(a[l]) + " vs " + str(b[l]);
  return "";
}

// --- criteria ---------------------------------------------------------------

Outcome one_component_table() {
  Outcome o;
  o.expect(onecomp::M(2, 1) == 1, "M(2,1) = 1");
  for (long l = 1; l <= 50; ++l) {
    o.expect(Rational(onecomp::M(l, 1)) == Rational(l - 1) * dfact(2 * l - 3), "M(" + std::to_string(l) + ",1)");
    o.expect(Rational(onecomp::M(l, 2)) == Rational((2 * l - 1) * (l - 1) * (l - 1)) * dfact(2 * l - 5),
             "M(" + std::to_string(l) + ",2)");
  }
  return o;
}

Outcome galled_cross_method() {
  Outcome o;
  for (int k : {2, 3}) {
    const EgfSeries e = galled::ek_series(k, 40);
    long l_min = 41;
    for (long l = 40; l >= 1; --l) {
      const Rational closed = k == 2 ? galled::gn_closed2(l) : galled::gn_closed3(l);
      if (closed != e[static_cast<int>(l)] * fact(l)) break;
      l_min = l;
    }
    o.note("k=" + std::to_string(k) + ": closed form equals series for l in [" + std::to_string(l_min) + ", 40]");
    o.expect(l_min <= 3, "k=" + std::to_string(k) + " l_min <= 3");
  }
  return o;
}

Outcome rv_cross_method() {
  Outcome o;
  for (int k : {2, 3}) {
    const EgfSeries s = retvis::pattern_sum_series(k, 40);
    long l_min = 41;
    bool integral = true;
    for (long l = 1; l <= 40; ++l) integral = integral && is_integral(s[static_cast<int>(l)] * fact(l));
    for (long l = 40; l >= 1; --l) {
      const Rational closed = k == 2 ? retvis::rv_closed2(l) : retvis::rv_closed3(l);
      if (closed != s[static_cast<int>(l)] * fact(l)) break;
      l_min = l;
    }
    o.expect(integral, "k=" + std::to_string(k) + " pattern sums integral");
    if (l_min <= 40) {
      o.note("k=" + std::to_string(k) + ": closed form equals series for l in [" + std::to_string(l_min) + ", 40]");
    } else {
      std::ostringstream d;
      d << "k=" << k << ": closed form differs from the series at l=40;";
      for (long l = 1; l <= 4; ++l)
        d << " l=" << l << " closed " << str(k == 2 ? retvis::rv_closed2(l) : retvis::rv_closed3(l)) << " series " << str(s[static_cast<int>(l)] * fact(l))
          << ";";
      o.note(d.str());
    }
    o.expect(l_min <= 3, "k=" + std::to_string(k) + " l_min <= 3");
  }
  return o;
}

// Labeled patterns on {0..m-1} rooted at 0, each non-root vertex receiving
// two parent slots (possibly the same parent twice), acyclic.
long labeled_pattern_count(int m) {
  long count = 0;
  std::vector<std::pair<int, int>> parents(m);
  std::function<void(int)> rec = [&](int v) {
    if (v == m) {
      // Acyclic iff repeatedly removing sources empties the graph.
      std::vector<int> indeg(m, 0);
      for (int u = 1; u < m; ++u) indeg[u] = 2;
      std::vector<int> stack{0};
      int seen = 0;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++seen;
        for (int w = 1; w < m; ++w) {
          const int hits = (parents[w].first == u) + (parents[w].second == u);
          if (hits && (indeg[w] -= hits) == 0) stack.push_back(w);
        }
      }
      count += seen == m;
      return;
    }
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b)
        if (a != v && b != v) {
          parents[v] = {a, b};
          rec(v + 1);
        }
  };
  rec(1);
  return count;
}

long brute_automorphisms(const netcore::DagPattern& p) {
  std::vector<int> perm(p.m);
  std::iota(perm.begin(), perm.end(), 0);
  long n = 0;
  do {
    bool ok = perm[0] == 0;
    for (const auto& [e, mult] : p.mult) {
      auto it = p.mult.find({perm[e.first], perm[e.second]});
      ok = ok && it != p.mult.end() && it->second == mult;
    }
    n += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n;
}

Outcome pattern_catalog() {
  Outcome o;
  for (int m : {3, 4}) {
    const auto& cat = retvis::enumerate_dm(m);
    std::multiset<long> factors;
    Rational labeled = 0;
    for (const auto& e : cat.patterns) {
      o.expect(brute_automorphisms(e.pattern) == e.automorphisms, "automorphism count of " + e.code);
      factors.insert(e.automorphisms);
      labeled += fact(m - 1) / e.automorphisms;
    }
    o.expect(labeled == labeled_pattern_count(m), "orbit sum equals labeled count for m=" + std::to_string(m));
    std::ostringstream d;
    d << "|D_" << m << "| = " << cat.patterns.size() << ", symmetry factors";
    for (long f : factors) d << " " << f;
    o.note(d.str());
  }
  const auto& d3 = retvis::enumerate_dm(3);
  const auto& d4 = retvis::enumerate_dm(4);
  std::multiset<long> f3, f4;
  for (const auto& e : d3.patterns) f3.insert(e.automorphisms);
  for (const auto& e : d4.patterns) f4.insert(e.automorphisms);
  o.expect(d3.patterns.size() == 3 && d4.patterns.size() == 13, "catalog sizes 3 and 13");
  o.expect(f3 == std::multiset<long>{1, 1, 2}, "m(A)=2, m(B)=m(C)=1");
  std::multiset<long> want4{6, 2, 2, 2};
  for (int i = 0; i < 9; ++i) want4.insert(1);
  o.expect(f4 == want4, "m(A_1)=6, m(A_2)=m(B_1)=m(B_4)=2, others 1");
  return o;
}

Outcome displays() {
  Outcome o;
  constexpr int T = 24;
  auto m_series = [](long shift, long k, long from) {
    return series_of([=](long l) { return onecomp::M(l + shift, k); }, from, T);
  };
  auto compare = [&](const std::string& name, const LaurentX& display, const EgfSeries& want) {
    const EgfSeries got = genfun::laurent_to_series(display, T);
    const std::string diff = first_difference(got, want);
    o.expect(diff.empty(), name + " (display vs computed at " + diff + ")");
    if (diff.empty()) o.note(name + " matches to order 24");
  };
  const LaurentX F2 = X(-7, Rational(15, 4)) + X(-5, Rational(-3, 2)) + X(-3, Rational(1, 4)) + X(-1, Rational(1, 2));
  const LaurentX F1 = X(-3, Rational(1, 2)) + X(-1, Rational(-1, 2));
  const LaurentX F0 = X(0) - X(1);
  compare("F_1", F1, m_series(1, 1, 0));
  compare("F_2", F2, m_series(2, 2, 0));
  compare("F_2 as (3-z+7z^2-4z^3)/X^7",
          genfun::laurent_from_z_poly(genfun::Polynomial{3, -1, 7, -4}) * X(-7), m_series(2, 2, 0));
  compare("f_a1", F2, m_series(2, 2, 0));
  compare("f_a2 = f_a3 = f_b3 = f_c3", F0, m_series(0, 0, 1));
  compare("f_b1 = f_b2", F1, m_series(1, 1, 0));
  compare("f_c1", X(-5, Rational(3, 2)) + X(-3, Rational(-1, 2)), m_series(2, 1, 0));
  compare("f_c2", X(-1) - X(0), m_series(1, 0, 1));
  compare("E_1", galled::e1_published(), galled::ek_series(1, T));
  compare("E_2", galled::e2_published(), galled::ek_series(2, T));
  compare("RV k=2 display", retvis::rv2_published(),
          series_of([](long l) { return retvis::rv_series_count(static_cast<int>(l), 2, T); }, 0, T));
  compare("f_A + f_B", retvis::fa_published() + retvis::fb_published(),
          series_of([](long l) { return retvis::rv_series_count(static_cast<int>(l), 3, T); }, 0, T));
  return o;
}

Outcome functional_equation() {
  Outcome o;
  const auto r = galled::gzv_identity_check(4, 12);
  o.expect(r.ok, "gzv identity K=4, T=12: " + r.detail);
  return o;
}

Outcome tree_sum() {
  Outcome o;
  for (int l = 1; l <= 5; ++l) {
    const auto by_k = galled::gn_tree_sum_by_k(l);
    BigInt total = 0;
    for (int k = 0; k <= 2 * l; ++k) {
      const BigInt tree = k < static_cast<int>(by_k.size()) ? by_k[k] : BigInt(0);
      total += tree;
      o.expect(tree == galled::ek_series(k, 5).count(l), "l=" + std::to_string(l) + " k=" + std::to_string(k));
    }
    o.expect(total == galled::gn_tree_sum(l), "total at l=" + std::to_string(l));
    o.note("l=" + std::to_string(l) + ": GN tree sum " + total.get_str());
  }
  return o;
}

Outcome brute_matrix() {
  Outcome o;
  std::vector<std::pair<int, int>> cells;
  for (int k = 0; k <= 3; ++k) cells.emplace_back(1, k);
  for (int k = 0; k <= 5; ++k) cells.emplace_back(2, k);
  for (int k = 0; k <= 3; ++k) cells.emplace_back(3, k);
  for (int k = 0; k <= 3; ++k) cells.emplace_back(4, k);
  std::map<std::pair<int, int>, oracle::ClassCounts> got;
  for (auto [l, k] : cells) {
    const auto c = oracle::count_by_class(l, k);
    got[{l, k}] = c;
    const std::string at = "(" + std::to_string(l) + "," + std::to_string(k) + ")";
    o.expect(galled::gn_count(l, k) == c.gn, "gn" + at + " series vs brute " + std::to_string(c.gn));
    o.expect(retvis::rv_count(l, k) == c.rv, "rv" + at + " series vs brute " + std::to_string(c.rv));
    if (k == 0) {
      for (long v : {c.pn, c.rv, c.gn, c.tc, c.normal}) o.expect(Rational(v) == trees(l), "trees" + at);
    }
    if (k == 1) {
      for (long v : {c.pn, c.rv, c.gn, c.tc}) o.expect(Rational(v) == k1(l), "k=1 count" + at);
    }
    if (k == 2 && l >= 2) o.expect(Rational(c.normal) == normal2(l), "normal" + at);
    if (k > l - 1) o.expect(c.tc == 0, "tc zero beyond l-1" + at);
    if (k > std::max(l - 2, 0)) o.expect(c.normal == 0, "normal zero beyond l-2" + at);
    if (k > 2 * l - 2) o.expect(c.gn == 0, "gn zero beyond 2l-2" + at);
    if (k > 3 * l - 3) o.expect(c.rv == 0, "rv zero beyond 3l-3" + at);
    std::ostringstream d;
    d << at << " pn=" << c.pn << " rv=" << c.rv << " gn=" << c.gn << " tc=" << c.tc << " normal=" << c.normal;
    o.note(d.str());
  }
  o.expect(got[{2, 2}].gn == 3 && got[{2, 2}].rv == 5, "gn(2,2)=3, rv(2,2)=5");
  const auto& c31 = got[{3, 1}];
  o.expect(c31.pn == 21 && c31.rv == 21 && c31.gn == 21 && c31.tc == 21, "pn, rv, gn, tc all 21 at (3,1)");
  o.expect(got[{2, 3}].rv == got[{2, 1}].tc, "RV(2,3) = TC(2,1)");
  return o;
}

Outcome appendix() {
  Outcome o;
  const auto r2 = oracle::max_ret_check(2);
  o.expect(r2.max_k == 3 && r2.count_at_max == 2 && r2.tc_max_count == 2 && r2.ok, "maxRetCheck(2)");
  o.note("l=2: maxK=" + std::to_string(r2.max_k) + " countAtMax=" + std::to_string(r2.count_at_max) +
         " tcMaxCount=" + std::to_string(r2.tc_max_count));
  // Decompress every TC(3,2) network independently of max_ret_check.
  std::set<std::string> codes;
  long n = 0;
  bool valid = true;
  for (const auto& tc : oracle::enumerate_networks({3, 2})) {
    if (!netcore::is_tree_child(tc)) continue;
    ++n;
    const auto img = oracle::decompress_max_ret(tc);
    valid = valid && img.reticulation_count() == 6 && img.leaf_count() == 3 &&
            netcore::is_reticulation_visible(img) &&
            netcore::canonical_code(netcore::component_graph(img)) ==
                netcore::canonical_code(oracle::expected_component_graph(tc));
    codes.insert(netcore::canonical_code(img));
  }
  o.expect(valid, "images valid, 6 reticulations, component graphs round-trip");
  o.expect(static_cast<long>(codes.size()) == n, "images pairwise distinct");
  o.expect(retvis::rv_series_count(3, 6) == n, "RV(3,6) series equals TC(3,2)");
  const auto r3 = oracle::max_ret_check(3);
  o.expect(r3.ok, "maxRetCheck(3)");
  o.note("l=3: " + std::to_string(n) + " TC(3,2) networks decompressed; RV(3,6) = " +
         retvis::rv_series_count(3, 6).get_str());
  return o;
}

Outcome coefficient_lemma() {
  Outcome o;
  std::ostringstream table;
  table << "threshold table:";
  for (int d = -9; d <= 9; ++d) {
    const long n0 = genfun::lemma_threshold(d, 60);
    table << " d=" << d << ":" << n0;
    for (long n = 0; n <= 60; ++n) {
      const Rational exact = genfun::extract_coeff_exact(X(d), n);
      o.expect(exact == x_power_coeff(d, n), "exact coefficient d=" + std::to_string(d) + " n=" + std::to_string(n));
      if (n >= n0)
        o.expect(genfun::extract_coeff_lemma(d, n) == exact,
                 "lemma d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
  }
  o.note(table.str());
  return o;
}

Outcome asymptotics() {
  Outcome o;
  for (const std::string cls : {"gn", "rv"})
    for (int k = 1; k <= 3; ++k) {
      auto exact = [&](long l) { return cls == "gn" ? galled::gn_count(l, k) : retvis::rv_count(l, k); };
      const double e100 = std::abs(galled::asympt_ratio(exact(100), 100, k) - 1);
      const double e400 = std::abs(galled::asympt_ratio(exact(400), 400, k) - 1);
      std::ostringstream d;
      d.precision(4);
      d << cls << " k=" << k << ": |ratio-1| " << e100 << " at l=100, " << e400 << " at l=400";
      o.note(d.str());
      o.expect(e400 < e100, cls + " k=" + std::to_string(k) + " improves");
      o.expect(e400 <= 0.05, cls + " k=" + std::to_string(k) + " within 0.05 at l=400");
    }
  const auto g = galled::gamma_identity_check(8, 1e-12);
  o.expect(g.ok, "gamma identity k <= 8 at 1e-12");
  return o;
}

Outcome boundary_zeros() {
  Outcome o;
  o.expect(galled::gn_closed2(1) == 0, "GNClosed2(1) = 0");
  o.expect(galled::gn_closed3(2) == 0, "GNClosed3(2) = 0");
  o.expect(retvis::rv_closed2(1) == 0, "RVClosed2(1) = 0");
  for (long l = 1; l <= 4; ++l) {
    o.expect(galled::gn_count(l, static_cast<int>(2 * l - 2)) > 0, "GN positive at k = 2l-2, l=" + std::to_string(l));
    o.expect(galled::gn_count(l, static_cast<int>(2 * l - 1)) == 0, "GN zero at k = 2l-1, l=" + std::to_string(l));
  }
  for (int l = 1; l <= 2; ++l) {
    o.expect(retvis::rv_series_count(l, 3 * l - 3) > 0, "RV positive at k = 3l-3, l=" + std::to_string(l));
    o.expect(retvis::rv_series_count(l, 3 * l - 2) == 0, "RV zero at k = 3l-2, l=" + std::to_string(l));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"one-component table", one_component_table},
      {"galled cross-method", galled_cross_method},
      {"reticulation-visible cross-method", rv_cross_method},
      {"pattern catalog", pattern_catalog},
      {"generating-function displays", displays},
      {"functional equation", functional_equation},
      {"tree sum", tree_sum},
      {"brute-force matrix", brute_matrix},
      {"appendix maximal reticulation", appendix},
      {"coefficient lemma", coefficient_lemma},
      {"asymptotics", asymptotics},
      {"boundary zeros", boundary_zeros},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " (" << timing
              << ")\n";
    for (const auto& d : o.details) std::cout << "      " << d << "\n";
    failed += !o.ok;
  }
  std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
