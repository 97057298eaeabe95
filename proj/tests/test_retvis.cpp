#include <doctest.h>

#include <algorithm>
#include <set>

#include "phylocount/galled/galled.hpp"
#include "phylocount/genfun/laurent.hpp"
#include "phylocount/netcore/dag_pattern.hpp"
#include "phylocount/oracle/enumerate.hpp"
#include "phylocount/onecomp/onecomp.hpp"
#include "phylocount/retvis/retvis.hpp"

using namespace phylocount;
using namespace phylocount::retvis;
using genfun::laurent_to_series;

namespace {

std::multiset<long> symmetry_factors(int m) {
  std::multiset<long> s;
  for (const auto& e : enumerate_dm(m).patterns) s.insert(e.automorphisms);
  return s;
}

const LaurentX X = LaurentX::monomial(1);

// Finds the catalog entry of D_3 whose pattern satisfies `pick`.
template <class Pred>
const CatalogEntry& find_d3(Pred pick) {
  const auto& ps = enumerate_dm(3).patterns;
  auto it = std::find_if(ps.begin(), ps.end(), pick);
  REQUIRE(it != ps.end());
  return *it;
}

}  // namespace

TEST_CASE("pattern catalogs") {
  CHECK(enumerate_dm(2).patterns.size() == 1);
  CHECK(enumerate_dm(3).patterns.size() == 3);
  CHECK(enumerate_dm(4).patterns.size() == 13);
  CHECK(symmetry_factors(3) == std::multiset<long>{1, 1, 2});
  const auto f4 = symmetry_factors(4);
  CHECK(f4.count(6) == 1);
  CHECK(f4.count(2) == 3);
  CHECK(f4.count(1) == 9);
  CHECK_THROWS_AS(enumerate_dm(1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_dm(9), std::invalid_argument);

  for (int m = 2; m <= 5; ++m) {
    const auto& cat = enumerate_dm(m);
    const PatternCatalog rev = enumerate_dm_reversed(m);
    REQUIRE(rev.patterns.size() == cat.patterns.size());
    long fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    for (std::size_t i = 0; i < cat.patterns.size(); ++i) {
      CHECK(rev.patterns[i].code == cat.patterns[i].code);
      CHECK(netcore::is_valid_pattern(cat.patterns[i].pattern));
      CHECK(fact % cat.patterns[i].automorphisms == 0);
    }
  }
}

TEST_CASE("vertex generating functions of D_3") {
  // C: root -> a (double), root -> b, a -> b.
  const auto& c = find_d3([](const CatalogEntry& e) {
    return !e.pattern.is_tree_shaped();
  });
  const auto& p = c.pattern;
  int middle = -1, sink = -1;
  for (int v = 0; v < p.m; ++v) {
    if (v == p.root) continue;
    (child_count(p, v) == 1 ? middle : sink) = v;
  }
  REQUIRE(middle >= 0);
  REQUIRE(sink >= 0);
  CHECK(child_count(p, p.root) == 2);
  CHECK(double_child_count(p, p.root) == 1);
  CHECK(vertex_gf_laurent(p, p.root) == LaurentX::monomial(-5, Rational(3, 2)) - LaurentX::monomial(-3, Rational(1, 2)));
  CHECK(vertex_gf_laurent(p, middle) == LaurentX::monomial(-1) - LaurentX(Rational(1)));
  CHECK(vertex_gf_laurent(p, sink) == LaurentX(Rational(1)) - X);
  for (int v = 0; v < p.m; ++v) CHECK(vertex_gf(p, v, 20) == laurent_to_series(vertex_gf_laurent(p, v), 20));

  // A: root with two double-edged children; f_root = F_2.
  const auto& a = find_d3([](const CatalogEntry& e) { return e.automorphisms == 2; });
  CHECK(a.pattern.is_tree_shaped());
  CHECK(vertex_gf_laurent(a.pattern, a.pattern.root) ==
        LaurentX::monomial(-7, Rational(15, 4)) - LaurentX::monomial(-5, Rational(3, 2)) +
            LaurentX::monomial(-3, Rational(1, 4)) + LaurentX::monomial(-1, Rational(1, 2)));
}

TEST_CASE("series counts") {
  CHECK(rv_series_count(2, 2) == 5);
  CHECK(rv_series_count(3, 2) == 123);
  CHECK(rv_series_count(1, 2) == 0);
  CHECK(rv_series_count(2, 3) == 2);
  // The maximum 3l - 3 is sharp at l = 1, 2.
  for (int k = 1; k <= 7; ++k) CHECK(rv_series_count(1, k) == 0);
  for (int k = 4; k <= 7; ++k) CHECK(rv_series_count(2, k) == 0);
  CHECK(rv_series_count(3, 6) == 42);
  CHECK(rv_series_count(3, 7) == 0);

  const auto s = pattern_sum_series(3, 30);
  const auto l = genfun::laurent_to_series(pattern_sum_laurent(3), 30);
  CHECK(s == l);
  for (int n = 0; n <= 30; ++n) CHECK(rv_count(n, 2) == rv_series_count(n, 2, 30));
}

TEST_CASE("series counts agree with brute force") {
  for (auto [l, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    CAPTURE(l);
    CAPTURE(k);
    CHECK(rv_series_count(l, k) == oracle::count_by_class(l, k, 4).rv);
  }
}

TEST_CASE("galled counts never exceed RV counts") {
  for (int k = 0; k <= 3; ++k)
    for (long l = 1; l <= 25; ++l) {
      const BigInt gn = galled::gn_count(l, k), rv = rv_count(l, k);
      CHECK(gn <= rv);
      if (k <= 1) CHECK(gn == rv);
    }
}

TEST_CASE("closed forms") {
  CHECK(rv_closed2(2) == 5);
  CHECK(rv_closed2(1) == 0);
  CHECK(rv_closed3(3) == 495);
  CHECK(rv_closed_threshold(2, 40) == 1);
  // The printed k = 3 formula disagrees with the series everywhere.
  CHECK(rv_closed_threshold(3, 40) == 41);
  CHECK(rv_closed3(3) != rv_series_count(3, 3));
}

TEST_CASE("f_A and f_B") {
  const FaFbReport corrected = fa_fb_check(24, false);
  CHECK(corrected.ok);
  CHECK(corrected.tree_patterns == 4);
  CHECK(corrected.other_patterns == 9);

  const FaFbReport printed = fa_fb_check(24, true);
  CHECK_FALSE(printed.ok);
  CHECK(printed.detail.find("f_A") != std::string::npos);

  // The tree-shaped patterns are the galled contributions.
  CHECK(fa_corrected() == galled::ek_laurent(3));
  const auto total = genfun::laurent_to_series(fa_corrected() + fb_corrected(), 4);
  CHECK(total.count(3) == 447);
}

TEST_CASE("the printed k = 2 display is the term of pattern A") {
  using genfun::laurent_from_z_poly;
  using genfun::Polynomial;
  const LaurentX f2 = onecomp::fk_laurent(2);
  const LaurentX one_minus_z_minus_x = laurent_from_z_poly(Polynomial{1, -1}) - X;
  CHECK(rv2_published() == f2 * one_minus_z_minus_x);
  const LaurentX a_term = f2 * (LaurentX(Rational(1)) - X).pow(2) * Rational(1, 2);
  CHECK(rv2_published() == a_term);
  CHECK(rv2_published() != pattern_sum_laurent(2));
}

TEST_CASE("component-graph sum") {
  CHECK(rv_component_sum(1) == 1);
  BigInt s2 = 0;
  for (int k = 0; k <= 3; ++k) s2 += rv_series_count(2, k);
  CHECK(rv_component_sum(2) == s2);
  CHECK(rv_component_sum(2) >= galled::gn_tree_sum(2));
  BigInt s3 = 0;
  for (int k = 0; k <= 6; ++k) s3 += rv_series_count(3, k);
  CHECK(rv_component_sum(3) == s3);
  CHECK_THROWS_AS(rv_component_sum(4), std::invalid_argument);
}

TEST_CASE("non-integral totals are rejected") {
  CHECK_THROWS_AS(require_integral(Rational(1, 2), "x"), std::domain_error);
}
