#include "phylocount/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "phylocount/cli/count.hpp"
#include "phylocount/galled/galled.hpp"
#include "phylocount/genfun/laurent.hpp"
#include "phylocount/onecomp/onecomp.hpp"
#include "phylocount/oracle/appendix.hpp"
#include "phylocount/oracle/enumerate.hpp"
#include "phylocount/retvis/retvis.hpp"

namespace phylocount::cli {
namespace {

using genfun::EgfSeries;
using genfun::LaurentX;
using genfun::laurent_from_z_poly;
using genfun::laurent_to_series;
using genfun::Polynomial;

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out_.push_back({suite_, name, ok ? "PASS" : "FAIL", detail});
  }

  void printed(const std::string& name, bool ok, const std::string& detail = "") {
    out_.push_back({suite_, name, ok ? "PASS" : "MISMATCH", detail});
  }

  // Runs f, turning an exception into a failed check.
  void guarded(const std::string& name, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

LaurentX random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), num(-9, 9), count(1, 4);
  LaurentX a;
  for (int i = count(rng); i > 0; --i) a += LaurentX::monomial(exp(rng), num(rng));
  return a;
}

std::string first_series_difference(const EgfSeries& a, const EgfSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int l = 0; l <= n; ++l)
    if (a[l] != b[l]) return "z^" + std::to_string(l) + ": " + a[l].get_str() + " vs " + b[l].get_str();
  return "";
}

void genfun_suite(Recorder& r) {
  r.guarded("coefficient lemma thresholds", [&] {
    std::ostringstream table;
    bool ok = true;
    for (int d = -9; d <= 9; ++d) {
      const long n0 = genfun::lemma_threshold(d, 60);
      const long allowed = std::max(0, (d + 1) / 2) + 1;
      ok = ok && n0 <= allowed;
      table << "d=" << d << " n0=" << n0 << (d < 9 ? "; " : "");
    }
    r.check("coefficient lemma thresholds", ok, table.str());
  });
  r.check("1 - X expansion", laurent_to_series(LaurentX(Rational(1)) - LaurentX::monomial(1), 3) ==
                                 EgfSeries(std::vector<Rational>{0, 1, Rational(1, 2), Rational(1, 2)}));
  const Polynomial p{3, -1, 7, -4};
  r.check("z-polynomial round trip", laurent_to_series(laurent_from_z_poly(p), 6) ==
                                         EgfSeries(std::vector<Rational>{3, -1, 7, -4, 0, 0, 0}));
  std::mt19937 rng(2024);
  bool laws = true, diff = true;
  for (int i = 0; i < 50; ++i) {
    const LaurentX a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    laws = laws && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
    diff = diff && laurent_to_series(genfun::laurent_diff_z(a), 15) ==
                       genfun::series_diff_z(laurent_to_series(a, 16), 1);
  }
  r.check("Laurent ring laws on random operands", laws);
  r.check("d/dz commutes with expansion", diff);
}

void onecomp_suite(Recorder& r) {
  r.check("M(2,1) = 1", onecomp::M(2, 1) == 1);
  bool closed = true;
  for (long l = 1; l <= 50; ++l) {
    closed = closed && onecomp::M(l, 1) == BigInt(l - 1) * double_factorial(2 * l - 3);
    closed = closed && Rational(onecomp::M(l, 2)) ==
                           Rational((2 * l - 1) * (l - 1) * (l - 1)) * double_factorial_ext(2 * l - 5);
  }
  r.check("M(l,1), M(l,2) closed forms, l <= 50", closed);
  r.guarded("p_k degree 2k, leading coefficient 2^k", [&] {
    bool ok = true;
    for (int k = 1; k <= 6; ++k) {
      const auto pk = onecomp::pk_polynomial(k);
      ok = ok && pk.degree() == 2 * k && pk.leading_coefficient() == Rational(pow2(k));
    }
    r.check("p_k degree 2k, leading coefficient 2^k", ok);
  });
  r.guarded("F_k = d^k/dz^k M_k", [&] {
    bool ok = true;
    for (int k = 0; k <= 6; ++k)
      ok = ok && genfun::series_diff_z(onecomp::mk_series(k, 30), k) == onecomp::fk_series(k, 30 - k);
    r.check("F_k = d^k/dz^k M_k", ok);
  });
  const LaurentX X = LaurentX::monomial(1);
  r.printed("printed F_0", onecomp::fk_laurent(0) == LaurentX(Rational(1)) - X);
  r.printed("printed F_1", onecomp::fk_laurent(1) == LaurentX::z() * LaurentX::monomial(-3));
  r.printed("printed F_2",
            onecomp::fk_laurent(2) == laurent_from_z_poly(Polynomial{3, -1, 7, -4}) * LaurentX::monomial(-7));
  const auto b2 = onecomp::baseline_counts(2), b3 = onecomp::baseline_counts(3);
  r.check("baseline counts", b2.trees == 1 && b2.k1_count == 2 && b3.k1_count == 21 &&
                                 onecomp::baseline_counts(1).k1_count == 0);
}

void galled_suite(Recorder& r) {
  bool integral = true;
  for (int k = 0; k <= 6; ++k) {
    const EgfSeries e = galled::ek_series(k, 40);
    for (int l = 0; l <= 40; ++l) {
      const Rational c = e[l] * Rational(factorial(l));
      integral = integral && is_integral(c) && c >= 0 && ((c == 0) == (l < 1 || k > 2 * l - 2));
    }
  }
  r.check("E_k counts integral, zero exactly beyond 2l-2 (k <= 6, l <= 40)", integral);
  for (int k = 2; k <= 3; ++k) {
    const long t = galled::gn_closed_threshold(k, 40);
    r.check("GN closed form k=" + std::to_string(k) + " threshold", t <= 3, "l_min=" + std::to_string(t));
  }
  r.check("GN closed forms at the boundary", galled::gn_closed2(1) == 0 && galled::gn_closed3(2) == 0);
  const auto gzv = galled::gzv_identity_check(4, 12);
  r.check("functional equation K=4, T=12", gzv.ok, gzv.detail);
  r.printed("printed E_1", galled::e1_published() == galled::ek_laurent(1));
  r.printed("printed E_2", galled::e2_published() == galled::ek_laurent(2),
            first_series_difference(laurent_to_series(galled::e2_published(), 24),
                                    laurent_to_series(galled::ek_laurent(2), 24)));
  bool tree = true;
  for (int l = 1; l <= 5; ++l) {
    const auto by_k = galled::gn_tree_sum_by_k(l);
    BigInt total = 0;
    for (std::size_t k = 0; k < by_k.size(); ++k) {
      tree = tree && by_k[k] == galled::gn_count(l, static_cast<int>(k));
      total += by_k[k];
    }
    tree = tree && total == galled::gn_tree_sum(l);
  }
  r.check("tree sum by k equals series (l <= 5)", tree);
  const auto g = galled::gamma_identity_check(8);
  std::ostringstream ge;
  ge << "max relative error " << g.max_relative_error;
  r.check("Gamma(2k-1/2) identity, k <= 8", g.ok, ge.str());
  bool improving = true;
  for (int k = 1; k <= 3; ++k)
    improving = improving && std::abs(galled::asympt_ratio(galled::gn_count(400, k), 400, k) - 1) <
                                 std::abs(galled::asympt_ratio(galled::gn_count(100, k), 100, k) - 1);
  r.check("asymptotic ratio improves from l=100 to l=400", improving);
}

void retvis_suite(Recorder& r) {
  std::multiset<long> f3, f4;
  for (const auto& e : retvis::enumerate_dm(3).patterns) f3.insert(e.automorphisms);
  for (const auto& e : retvis::enumerate_dm(4).patterns) f4.insert(e.automorphisms);
  r.check("|D_3| = 3, |D_4| = 13", retvis::enumerate_dm(3).patterns.size() == 3 &&
                                       retvis::enumerate_dm(4).patterns.size() == 13);
  r.check("symmetry factors", f3 == std::multiset<long>{1, 1, 2} && f4.count(6) == 1 && f4.count(2) == 3);
  bool stable = true;
  for (int m = 2; m <= 5; ++m) {
    const auto rev = retvis::enumerate_dm_reversed(m);
    const auto& cat = retvis::enumerate_dm(m);
    stable = stable && rev.patterns.size() == cat.patterns.size();
    for (std::size_t i = 0; stable && i < rev.patterns.size(); ++i)
      stable = rev.patterns[i].code == cat.patterns[i].code;
  }
  r.check("catalog independent of construction order (m <= 5)", stable);
  r.guarded("pattern sums integral", [&] {
    for (int k = 1; k <= 4; ++k)
      for (int l = 0; l <= 20; ++l) retvis::rv_series_count(l, k, 20);
    r.check("pattern sums integral", true, "k <= 4, l <= 20");
  });
  bool bound = true;
  for (int k = 1; k <= 7; ++k) bound = bound && retvis::rv_series_count(1, k) == 0;
  for (int k = 4; k <= 7; ++k) bound = bound && retvis::rv_series_count(2, k) == 0;
  r.check("RV zero beyond 3l-3 (l = 1, 2)", bound);
  bool below = true;
  for (int k = 0; k <= 3; ++k)
    for (long l = 1; l <= 25; ++l) {
      const BigInt gn = galled::gn_count(l, k), rv = retvis::rv_count(l, k);
      below = below && gn <= rv && (k > 1 || gn == rv);
    }
  r.check("GN <= RV, equal for k <= 1 (l <= 25)", below);
  const long t2 = retvis::rv_closed_threshold(2, 40), t3 = retvis::rv_closed_threshold(3, 40);
  r.printed("printed RV closed form k=2", t2 <= 3, "l_min=" + std::to_string(t2));
  r.printed("printed RV closed form k=3", t3 <= 3,
            t3 > 40 ? "disagrees for every l <= 40; l=3: closed " + retvis::rv_closed3(3).get_str() + ", series " +
                          retvis::rv_series_count(3, 3).get_str()
                    : "l_min=" + std::to_string(t3));
  const auto printed = retvis::fa_fb_check(24, true);
  r.printed("printed f_A and f_B", printed.ok, printed.detail);
  const auto corrected = retvis::fa_fb_check(24, false);
  r.check("corrected f_A and f_B", corrected.ok, corrected.detail);
  r.check("tree-shaped patterns sum to E_3", retvis::fa_corrected() == galled::ek_laurent(3));
  r.printed("printed RV k=2 display equals the RV_2 generating function",
            retvis::rv2_published() == retvis::pattern_sum_laurent(2),
            first_series_difference(laurent_to_series(retvis::rv2_published(), 24),
                                    retvis::pattern_sum_series(2, 24)));
  BigInt s2 = 0, s3 = 0;
  for (int k = 0; k <= 3; ++k) s2 += retvis::rv_series_count(2, k);
  for (int k = 0; k <= 6; ++k) s3 += retvis::rv_series_count(3, k);
  r.check("component-graph sum equals pattern sums (l <= 3)",
          retvis::rv_component_sum(1) == 1 && retvis::rv_component_sum(2) == s2 && retvis::rv_component_sum(3) == s3,
          "RV_2=" + s2.get_str() + ", RV_3=" + s3.get_str());
}

void oracle_suite(Recorder& r, int threads) {
  std::vector<std::pair<int, int>> cells;
  for (int l = 1; l <= 3; ++l)
    for (int k = 0; k <= 3; ++k) cells.emplace_back(l, k);
  cells.emplace_back(2, 4);
  cells.emplace_back(2, 5);
  for (int k = 0; k <= 2; ++k) cells.emplace_back(4, k);
  for (auto [l, k] : cells) {
    const auto c = oracle::count_by_class(l, k, threads);
    bool ok = c.normal <= c.tc && c.tc <= c.rv && c.gn <= c.rv && c.rv <= c.pn;
    std::ostringstream d;
    d << "pn=" << c.pn << " rv=" << c.rv << " gn=" << c.gn << " tc=" << c.tc << " normal=" << c.normal;
    ok = ok && galled::gn_count(l, k) == c.gn && retvis::rv_count(l, k) == c.rv;
    const std::pair<const char*, long> closed_classes[] = {
        {"pn", c.pn}, {"tc", c.tc}, {"normal", c.normal}, {"trees", k == 0 ? c.pn : 0}};
    for (auto [cls, got] : closed_classes) {
      const auto methods = supported_methods(cls, l, k);
      if (std::find(methods.begin(), methods.end(), "closed") != methods.end())
        ok = ok && count({cls, l, k, "closed"}).value == got;
    }
    r.check("brute force l=" + std::to_string(l) + " k=" + std::to_string(k), ok, d.str());
  }
}

void appendix_suite(Recorder& r, int threads) {
  for (int l = 2; l <= 3; ++l) {
    const auto rep = oracle::max_ret_check(l, threads);
    std::ostringstream d;
    d << "maxK=" << rep.max_k << " countAtMax=" << rep.count_at_max << " tcMaxCount=" << rep.tc_max_count
      << (rep.exhaustive ? " (exhaustive)" : " (decompression)");
    r.check("maximum reticulation number l=" + std::to_string(l), rep.ok, d.str());
  }
  r.check("RV(3,6) series equals TC(3,2)", retvis::rv_series_count(3, 6) == 42 && retvis::rv_series_count(3, 7) == 0);
  bool rv_ok = true;
  for (auto [l, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 1}})
    for (const auto& net : oracle::enumerate_networks({l, k, threads}))
      if (netcore::is_tree_child(net)) rv_ok = rv_ok && oracle::r_value(net) == 2 * l + k - 2;
  r.check("r-value equals 2l+k-2 on binary tree-child networks", rv_ok);
  std::ostringstream a;
  a.precision(12);
  a << "a_1=" << oracle::airy_a1();
  r.check("Airy zero", std::abs(oracle::airy_a1() + 2.338107410459767) < 1e-12, a.str());
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int threads) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw UsageError("unknown suite '" + suite + "'");
  std::vector<CheckResult> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (want("genfun")) {
    Recorder r("genfun", out);
    genfun_suite(r);
  }
  if (want("onecomp")) {
    Recorder r("onecomp", out);
    onecomp_suite(r);
  }
  if (want("galled")) {
    Recorder r("galled", out);
    galled_suite(r);
  }
  if (want("retvis")) {
    Recorder r("retvis", out);
    retvis_suite(r);
  }
  if (want("oracle")) {
    Recorder r("oracle", out);
    oracle_suite(r, threads);
  }
  if (want("appendix")) {
    Recorder r("appendix", out);
    appendix_suite(r, threads);
  }
  return out;
}

bool suite_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& c) { return c.status == "FAIL"; });
}

}  // namespace phylocount::cli
