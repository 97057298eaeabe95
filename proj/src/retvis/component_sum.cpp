#include <functional>
#include <map>
#include <stdexcept>

#include "phylocount/netcore/canonical.hpp"
#include "phylocount/onecomp/onecomp.hpp"
#include "phylocount/retvis/retvis.hpp"

namespace phylocount::retvis {
namespace {

// A stripped component graph under construction, built from the leaves up.
// Internal vertices have indegree 1 (reached by an arrowed edge) or 2; each
// vertex keeps slots for the parents it still lacks.
struct Partial {
  std::vector<int> indegree;  // 0 for leaves and the root
  std::vector<int> label;
  std::vector<std::vector<int>> children;
  std::vector<int> open;
  int singles = 0;
  int doubles = 0;

  bool is_leaf(int v) const { return label[v] != 0; }

  void add(int indeg, const std::vector<int>& kids) {
    for (int c : kids) --open[c];
    indegree.push_back(indeg);
    label.push_back(0);
    children.push_back(kids);
    open.push_back(indeg);
    if (indeg > 0) (indeg == 1 ? singles : doubles) += 1;
  }

  std::string code() const {
    netcore::ColoredDigraph g;
    g.n = static_cast<int>(label.size());
    for (int v = 0; v < g.n; ++v) g.color.push_back(is_leaf(v) ? label[v] : 1000L * (indegree[v] + 1));
    for (int v = 0; v < g.n; ++v)
      for (int c : children[v]) g.arcs.push_back({v, c, 1});
    return netcore::code_string(netcore::canonical_form(g).code);
  }

  // Every non-leaf vertex has a child that is not a reticulation.
  bool tree_child() const {
    for (std::size_t v = 0; v < label.size(); ++v) {
      if (is_leaf(static_cast<int>(v))) continue;
      bool ok = false;
      for (int c : children[v]) ok = ok || indegree[c] != 2;
      if (!ok) return false;
    }
    return true;
  }

  // prod_v sum_j binom(c_lf(v), j) M(c(v), c_1(v) + j)
  BigInt weight() const {
    BigInt w = 1;
    for (std::size_t v = 0; v < label.size(); ++v) {
      if (is_leaf(static_cast<int>(v))) continue;
      const int c = static_cast<int>(children[v].size());
      int leaves = 0, c1 = 0;
      for (int x : children[v]) {
        if (is_leaf(x)) ++leaves;
        else if (indegree[x] == 1) ++c1;
      }
      BigInt s = 0;
      for (int j = 0; j <= leaves; ++j) s += binomial(leaves, j) * onecomp::M(c, c1 + j);
      w *= s;
    }
    return w;
  }
};

void for_each_subset(const std::vector<int>& pool, std::size_t min_size,
                     const std::function<void(const std::vector<int>&)>& f) {
  const std::size_t n = pool.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> pick;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) pick.push_back(pool[i]);
    if (pick.size() >= min_size) f(pick);
  }
}

}  // namespace

BigInt rv_component_sum(int l) {
  if (l < 1 || l > 3) throw std::invalid_argument("rv_component_sum: l must lie in [1, 3]");
  if (l == 1) return 1;
  // A tree-child network has at most l - 1 reticulations, and counting edges
  // bounds the indegree-1 vertices by l + r - 2.
  const int max_doubles = l - 1;
  const int max_singles = l + max_doubles - 2;

  std::map<std::string, Partial> level, finished;
  Partial start;
  for (int x = 1; x <= l; ++x) {
    start.indegree.push_back(0);
    start.label.push_back(x);
    start.children.emplace_back();
    start.open.push_back(1);
  }
  level.emplace(start.code(), start);
  while (!level.empty()) {
    std::map<std::string, Partial> next;
    for (const auto& [code, s] : level) {
      std::vector<int> pool;
      for (std::size_t v = 0; v < s.open.size(); ++v)
        if (s.open[v] > 0) pool.push_back(static_cast<int>(v));
      // Close with the root when every open vertex lacks exactly one parent.
      bool closable = pool.size() >= 2;
      for (int v : pool) closable = closable && s.open[v] == 1;
      if (closable) {
        Partial t = s;
        t.add(0, pool);
        if (t.tree_child()) finished.try_emplace(t.code(), std::move(t));
      }
      // An arrowed component needs at least two children; a component with
      // two parents needs at least one.
      if (s.singles < max_singles)
        for_each_subset(pool, 2, [&](const std::vector<int>& kids) {
          Partial t = s;
          t.add(1, kids);
          next.try_emplace(t.code(), std::move(t));
        });
      if (s.doubles < max_doubles)
        for_each_subset(pool, 1, [&](const std::vector<int>& kids) {
          Partial t = s;
          t.add(2, kids);
          next.try_emplace(t.code(), std::move(t));
        });
    }
    level = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [code, s] : finished) total += s.weight();
  return total;
}

}  // namespace phylocount::retvis
