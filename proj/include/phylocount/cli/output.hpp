#pragma once

#include <string>
#include <vector>

#include "phylocount/cli/count.hpp"
#include "phylocount/cli/verify.hpp"
#include "phylocount/numeric.hpp"

namespace phylocount::cli {

inline const std::vector<std::string> kFormats = {"json", "csv", "text"};

std::string render_count(const CountResult& r, const std::string& format);

struct CountTable {
  std::string cls;
  long l_max = 0;
  int k_max = 0;
  std::vector<std::vector<BigInt>> rows;  // rows[l-1][k]
};

/// Exact counts for 1 <= l <= l_max, 0 <= k <= k_max by the "auto" method.
CountTable make_table(const std::string& cls, long l_max, int k_max, int trunc_order = 64, int threads = 1);
std::string render_table(const CountTable& t, const std::string& format);

struct AsymptRow {
  long l = 0;
  BigInt exact;
  LogValue main_term;
  double ratio = 0;
};

/// Exact count, main term and their ratio for each l; class gn or rv, k <= 3.
std::vector<AsymptRow> asympt_report(const std::string& cls, int k, const std::vector<long>& ls);
std::string render_asympt(const std::string& cls, int k, const std::vector<AsymptRow>& rows,
                          const std::string& format);

std::string render_verify(const std::vector<CheckResult>& results, const std::string& format);

/// CSV of M(l, k) for 1 <= l <= l_max, 0 <= k <= min(k_max, l).
std::string render_m_table(long l_max, long k_max);

}  // namespace phylocount::cli
