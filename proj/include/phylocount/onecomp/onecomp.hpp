#pragma once

// One-component networks: every reticulation vertex is directly followed by a
// leaf. M(l, k) counts those with l leaves and k reticulations whose
// reticulation leaves carry the labels 1..k; they are the building blocks the
// component-graph decompression plugs into every component.

#include <shared_mutex>
#include <vector>

#include "phylocount/genfun/egf_series.hpp"
#include "phylocount/genfun/laurent.hpp"
#include "phylocount/genfun/polynomial.hpp"
#include "phylocount/numeric.hpp"

namespace phylocount::onecomp {

/// Memoized M(l, k). Rows are filled in increasing l (each row only needs
/// rows <= l), so lookups past the filled range extend the table under an
/// exclusive lock; reads of filled rows take a shared lock.
class MTable {
 public:
  BigInt get(long l, long k);
  /// Fill every row up to and including l_max.
  void reserve(long l_max);
  long filled_rows() const;

 private:
  void fill_row(long l);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[l][k] for 0 <= k <= l
};

MTable& shared_m_table();

/// M(l, k); zero outside 0 <= k <= l and for l < 1.
BigInt M(long l, long k);

/// Number of one-component galled networks, binom(l, k) * M(l, k).
BigInt OGN(long l, long k);

/// The polynomial p_k with M(l, k) = p_k(l) * (2(l-k)-3)!! for l >= k,
/// interpolated through 2k+1 points and checked on 2k+10 more. Throws
/// std::logic_error if the check fails or the degree/leading coefficient is
/// not (2k, 2^k).
genfun::Polynomial pk_polynomial(int k);

/// sum_l M(l, k) z^l / l!, truncated at `order`.
genfun::EgfSeries mk_series(int k, int order);

/// sum_l M(l + k, k) z^l / l!. Asserts equality with the k-fold derivative of
/// mk_series.
genfun::EgfSeries fk_series(int k, int order);

/// Closed form of M_k(z) as a Laurent polynomial in X = sqrt(1-2z), found by
/// fitting the series and re-verified at a higher order. Cached.
const genfun::LaurentX& mk_laurent(int k);

/// F_k(z) = d^k/dz^k M_k(z) in Laurent form. Cached.
const genfun::LaurentX& fk_laurent(int k);

struct BaselineCounts {
  BigInt trees;    // (2l-3)!!
  BigInt k1_count;  // l(2l-1)!! - 2^(l-1) l!, shared by all classes but normal
  BigInt n2;        // normal networks with two reticulations
};

BaselineCounts baseline_counts(long l);

}  // namespace phylocount::onecomp
