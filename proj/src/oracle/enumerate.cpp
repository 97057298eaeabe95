#include "phylocount/oracle/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "phylocount/netcore/canonical.hpp"

namespace phylocount::oracle {
namespace {

enum Type { kLeaf = 0, kTree = 1, kRet = 2 };

// A network under construction, missing some parent edges.
struct Partial {
  std::vector<int> type;
  std::vector<int> label;
  std::vector<std::vector<int>> children;
  std::vector<int> open;  // parent edges still missing
  int trees = 0;
  int rets = 0;

  int add(int t, std::vector<int> kids) {
    for (int c : kids) --open[c];
    type.push_back(t);
    label.push_back(0);
    children.push_back(std::move(kids));
    open.push_back(t == kRet ? 2 : 1);
    (t == kTree ? trees : rets) += 1;
    return static_cast<int>(type.size()) - 1;
  }

  std::string code() const {
    netcore::ColoredDigraph g;
    g.n = static_cast<int>(type.size());
    for (int v = 0; v < g.n; ++v) g.color.push_back(type[v] * 1000000L + label[v]);
    for (int v = 0; v < g.n; ++v)
      for (int c : children[v]) g.arcs.push_back({v, c, 1});
    return netcore::code_string(netcore::canonical_form(g).code);
  }
};

using Level = std::map<std::string, Partial>;

void expand(const Partial& s, int max_trees, int max_rets, Level& out) {
  const int n = static_cast<int>(s.type.size());
  if (s.trees < max_trees)
    for (int a = 0; a < n; ++a) {
      if (s.open[a] == 0) continue;
      for (int b = a + 1; b < n; ++b) {
        if (s.open[b] == 0) continue;
        Partial t = s;
        t.add(kTree, {a, b});
        out.try_emplace(t.code(), std::move(t));
      }
    }
  if (s.rets < max_rets)
    for (int a = 0; a < n; ++a) {
      if (s.open[a] == 0) continue;
      Partial t = s;
      t.add(kRet, {a});
      out.try_emplace(t.code(), std::move(t));
    }
}

netcore::Network finish(const Partial& s) {
  const int n = static_cast<int>(s.type.size());
  int top = -1;
  for (int v = 0; v < n; ++v)
    if (s.open[v] > 0) top = v;
  std::vector<netcore::Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int c : s.children[v]) edges.emplace_back(v, c);
  edges.emplace_back(n, top);
  std::vector<int> labels = s.label;
  labels.push_back(0);
  return netcore::Network(n + 1, std::move(edges), std::move(labels), n);
}

}  // namespace

std::vector<netcore::Network> enumerate_networks(const EnumerationJob& job) {
  if (job.leaves < 1 || job.reticulations < 0) throw std::invalid_argument("enumerate_networks: need l >= 1, k >= 0");
  if (job.vertex_budget() > kVertexBudget)
    throw std::invalid_argument("enumerate_networks: vertex budget 2l+2k = " + std::to_string(job.vertex_budget()) +
                                " exceeds " + std::to_string(kVertexBudget));
  const int max_trees = job.leaves + job.reticulations - 1;
  const int max_rets = job.reticulations;

  Partial start;
  for (int x = 1; x <= job.leaves; ++x) {
    start.type.push_back(kLeaf);
    start.label.push_back(x);
    start.children.emplace_back();
    start.open.push_back(1);
  }
  Level level;
  level.emplace(start.code(), start);
  const int threads = std::max(1, job.threads);
  for (int step = 0; step < max_trees + max_rets; ++step) {
    std::vector<const Partial*> states;
    for (const auto& [code, s] : level) states.push_back(&s);
    std::vector<Level> parts(static_cast<std::size_t>(threads));
    auto work = [&](int t) {
      for (std::size_t i = static_cast<std::size_t>(t); i < states.size(); i += static_cast<std::size_t>(threads))
        expand(*states[i], max_trees, max_rets, parts[t]);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    Level next;
    for (auto& part : parts) next.merge(part);
    level = std::move(next);
  }

  std::vector<netcore::Network> out;
  for (const auto& [code, s] : level) {
    int open = 0;
    for (int o : s.open) open += o;
    if (open == 1) out.push_back(finish(s));
  }
  return out;
}

ClassCounts count_by_class(int leaves, int reticulations, int threads) {
  ClassCounts c;
  for (const auto& net : enumerate_networks({leaves, reticulations, threads})) {
    ++c.pn;
    const bool tc = netcore::is_tree_child(net);
    c.tc += tc;
    c.normal += tc && netcore::is_normal(net);
    c.rv += netcore::is_reticulation_visible(net);
    c.gn += netcore::is_galled(net);
  }
  return c;
}

std::function<bool(const netcore::Network&)> class_predicate(const std::string& name) {
  if (name == "pn") return [](const netcore::Network&) { return true; };
  if (name == "rv") return netcore::is_reticulation_visible;
  if (name == "gn") return netcore::is_galled;
  if (name == "tc") return netcore::is_tree_child;
  if (name == "normal") return netcore::is_normal;
  if (name == "onecomp") return netcore::is_one_component;
  if (name == "trees") return [](const netcore::Network& n) { return n.reticulation_count() == 0; };
  throw std::invalid_argument("unknown class '" + name + "'");
}

}  // namespace phylocount::oracle
