#pragma once

#include <string>
#include <vector>

#include "phylocount/genfun/egf_series.hpp"
#include "phylocount/genfun/laurent.hpp"
#include "phylocount/netcore/dag_pattern.hpp"
#include "phylocount/numeric.hpp"

namespace phylocount::retvis {

using genfun::EgfSeries;
using genfun::LaurentX;

struct CatalogEntry {
  netcore::DagPattern pattern;
  long automorphisms = 1;
  std::string code;
};

struct PatternCatalog {
  int m = 0;
  std::vector<CatalogEntry> patterns;  // sorted by canonical code
};

/// All rooted DAGs on m vertices (2 <= m <= 8) in which every non-root
/// vertex has indegree 2 counting double edges, up to isomorphism. Built by
/// repeatedly adding a sink to the catalog for m - 1.
const PatternCatalog& enumerate_dm(int m);

/// Same catalog built by adding sinks in reverse vertex order; used to
/// check that the result does not depend on construction order.
PatternCatalog enumerate_dm_reversed(int m);

/// c(v): distinct children; c_1(v): children reached by a double edge.
int child_count(const netcore::DagPattern& p, int v);
int double_child_count(const netcore::DagPattern& p, int v);

/// sum_{l >= l0} M(l + c, c_1) z^l / l!, with l0 = 1 exactly when c_1 = 0.
EgfSeries vertex_gf(const netcore::DagPattern& p, int v, int order);
LaurentX vertex_gf_laurent(const netcore::DagPattern& p, int v);

/// sum over the catalog of prod_v f_v / m(G), as a series and in closed form.
EgfSeries pattern_sum_series(int k, int order);
LaurentX pattern_sum_laurent(int k);

/// l! [z^l] of the pattern sum for D_{k+1}. Throws std::domain_error if the
/// weighted sum is not an integer.
BigInt rv_series_count(int l, int k, int order = -1);

/// The same count by exact coefficient extraction from the Laurent form of
/// the pattern sum; cheap for large l.
BigInt rv_count(long l, int k);

/// Closed forms for k = 2 and k = 3 (exact rationals; integral in range).
Rational rv_closed2(long l);
Rational rv_closed3(long l);

/// Smallest l0 such that the closed form equals the series count for every
/// l in [l0, l_max].
long rv_closed_threshold(int k, long l_max);

struct FaFbReport {
  bool ok = true;
  int tree_patterns = 0;
  int other_patterns = 0;
  std::string detail;
};

/// Splits D_4 into tree-shaped and other patterns and compares each group's
/// weighted sum with f_A and f_B to the given order: the printed forms when
/// `published` is set, otherwise the corrected ones.
FaFbReport fa_fb_check(int order, bool published = true);
LaurentX fa_published();
LaurentX fb_published();
/// f_A with the z^5 numerator coefficient -16, and f_B with the X^4 and X^6
/// coefficients 14 and 7; these match the pattern sums.
LaurentX fa_corrected();
LaurentX fb_corrected();
/// The printed RV k=2 Laurent display; it equals the term of the tree
/// pattern with a double-edged child in D_3.
LaurentX rv2_published();

/// Sum over admissible non-binary tree-child component graphs on l <= 3
/// leaves of prod_v sum_j binom(c_lf(v), j) M(c(v), c_1(v) + j).
BigInt rv_component_sum(int l);

}  // namespace phylocount::retvis
