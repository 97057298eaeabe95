#include "phylocount/cli/count.hpp"

#include <algorithm>
#include <stdexcept>

#include "phylocount/galled/galled.hpp"
#include "phylocount/netcore/network.hpp"
#include "phylocount/onecomp/onecomp.hpp"
#include "phylocount/oracle/enumerate.hpp"
#include "phylocount/retvis/retvis.hpp"

namespace phylocount::cli {
namespace {

bool known_class(const std::string& cls) { return std::find(kClasses.begin(), kClasses.end(), cls) != kClasses.end(); }

bool in_budget(long l, int k) { return 2 * l + 2 * static_cast<long>(k) <= oracle::kVertexBudget; }

bool has_closed(const std::string& cls, int k) {
  if (cls == "trees" || cls == "onecomp") return true;
  if (cls == "normal") return k == 0 || k == 2;
  if (cls == "gn" || cls == "rv") return k <= 3;
  return k <= 1;  // pn, tc
}

BigInt closed_value(const std::string& cls, long l, int k) {
  if (cls == "onecomp") return onecomp::OGN(l, k);
  if (cls == "trees") return k == 0 ? double_factorial(2 * l - 3) : BigInt(0);
  if (k == 0) return double_factorial(2 * l - 3);
  const auto base = onecomp::baseline_counts(l);
  if (k == 1) return base.k1_count;
  if (cls == "normal") return base.n2;
  const Rational q = cls == "gn" ? (k == 2 ? galled::gn_closed2(l) : galled::gn_closed3(l))
                                 : (k == 2 ? retvis::rv_closed2(l) : retvis::rv_closed3(l));
  return require_integral(q, cls + " closed form at l=" + std::to_string(l));
}

BigInt brute_value(const std::string& cls, long l, int k, int threads) {
  const auto pred = oracle::class_predicate(cls);
  long n = 0;
  for (const auto& net : oracle::enumerate_networks({static_cast<int>(l), k, threads})) n += pred(net);
  return n;
}

// The exact value used to certify closed forms for gn and rv.
BigInt exact_value(const std::string& cls, long l, int k) {
  return cls == "gn" ? galled::gn_count(l, k) : retvis::rv_count(l, k);
}

bool closed_agrees(const std::string& cls, long l, int k) {
  try {
    return closed_value(cls, l, k) == exact_value(cls, l, k);
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace

long max_reticulations(const std::string& cls, long l) {
  if (cls == "trees") return 0;
  if (cls == "gn") return 2 * l - 2;
  if (cls == "rv") return 3 * l - 3;
  if (cls == "tc") return l - 1;
  if (cls == "normal") return std::max(l - 2, 0L);
  if (cls == "onecomp") return l;
  return -1;
}

std::vector<std::string> supported_methods(const std::string& cls, long l, int k, int trunc_order) {
  std::vector<std::string> out;
  if (has_closed(cls, k)) out.push_back("closed");
  if (cls == "gn" && l <= trunc_order) out.push_back("series");
  if (cls == "rv" && k + 1 <= 8 && l <= trunc_order) out.push_back("series");
  if (cls == "gn" && l <= galled::kTreeSumMaxLeaves) out.push_back("treesum");
  if (cls == "rv" && k + 1 <= 8) out.push_back("dagsum");
  if (in_budget(l, k)) out.push_back("brute");
  return out;
}

CountResult count(const CountRequest& req) {
  if (!known_class(req.cls)) throw UsageError("unknown class '" + req.cls + "'");
  if (req.l < 1) throw UsageError("--leaves must be at least 1");
  if (req.k < 0) throw UsageError("--rets must be nonnegative");
  if (std::find(kMethods.begin(), kMethods.end(), req.method) == kMethods.end())
    throw UsageError("unknown method '" + req.method + "'");
  CountResult r{req.cls, req.l, req.k, req.method, 0, "validated"};
  const long bound = max_reticulations(req.cls, req.l);
  if (req.method == "auto" && bound >= 0 && req.k > bound) {
    r.method = "bound";
    r.validity = "bound";
    return r;
  }
  const auto methods = supported_methods(req.cls, req.l, req.k, req.trunc_order);
  std::string method = req.method;
  if (method == "auto") {
    // A closed form is only taken when an exact method confirms it.
    method = methods.empty() ? "" : methods.front();
    if (method == "closed" && (req.cls == "gn" || req.cls == "rv") &&
        !closed_agrees(req.cls, req.l, req.k))
      method = methods.size() > 1 ? methods[1] : "";
  }
  if (method.empty() || std::find(methods.begin(), methods.end(), method) == methods.end()) {
    std::string list;
    for (const auto& m : methods) list += (list.empty() ? "" : ", ") + m;
    throw UsageError("method '" + req.method + "' does not support class " + req.cls + " at l=" +
                     std::to_string(req.l) + ", k=" + std::to_string(req.k) +
                     "; supported: " + (list.empty() ? "none" : list));
  }
  r.method = method;
  if (method == "closed") {
    try {
      r.value = closed_value(req.cls, req.l, req.k);
    } catch (const std::domain_error&) {
      throw UsageError("the " + req.cls + " closed form is not an integer at l=" + std::to_string(req.l) + ", k=" +
                       std::to_string(req.k) + "; use --method series");
    }
    if (req.cls == "gn" || req.cls == "rv")
      r.validity = r.value == exact_value(req.cls, req.l, req.k) ? "validated" : "disagrees";
    else if (req.cls != "trees" && req.cls != "onecomp")
      r.validity = "formula";
  } else if (method == "series") {
    const auto s = req.cls == "gn" ? galled::ek_series(req.k, req.trunc_order)
                                   : retvis::pattern_sum_series(req.k, req.trunc_order);
    r.value = s.count(static_cast<int>(req.l));
  } else if (method == "treesum") {
    const auto by_k = galled::gn_tree_sum_by_k(static_cast<int>(req.l));
    r.value = req.k < static_cast<int>(by_k.size()) ? by_k[req.k] : BigInt(0);
  } else if (method == "dagsum") {
    r.value = retvis::rv_count(req.l, req.k);
  } else {
    r.value = brute_value(req.cls, req.l, req.k, req.threads);
  }
  return r;
}

}  // namespace phylocount::cli
