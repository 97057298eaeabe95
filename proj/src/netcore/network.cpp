#include "phylocount/netcore/network.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace phylocount::netcore {

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Root: return "root";
    case VertexKind::Leaf: return "leaf";
    case VertexKind::TreeVertex: return "tree";
    case VertexKind::ReticulationVertex: return "reticulation";
    case VertexKind::Invalid: return "invalid";
  }
  return "invalid";
}

Network::Network(int vertex_count, std::vector<Edge> edges, std::vector<int> labels, int root)
    : n_(vertex_count), root_(root), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0) throw std::invalid_argument("Network: negative vertex count");
  if (static_cast<int>(labels_.size()) != n_) throw std::invalid_argument("Network: label vector size mismatch");
  if (root_ < 0 || root_ >= n_) throw std::invalid_argument("Network: root out of range");
  children_.assign(static_cast<std::size_t>(n_), {});
  parents_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("Network: edge endpoint out of range");
    children_[u].push_back(v);
    parents_[v].push_back(u);
  }
}

VertexKind Network::kind(int v) const {
  const auto in = parents_[v].size(), out = children_[v].size();
  if (in == 0 && out == 1) return VertexKind::Root;
  if (in == 1 && out == 0) return VertexKind::Leaf;
  if (in == 1 && out == 2) return VertexKind::TreeVertex;
  if (in == 2 && out == 1) return VertexKind::ReticulationVertex;
  return VertexKind::Invalid;
}

int Network::leaf_count() const {
  int c = 0;
  for (int v = 0; v < n_; ++v) c += kind(v) == VertexKind::Leaf;
  return c;
}

int Network::reticulation_count() const {
  int c = 0;
  for (int v = 0; v < n_; ++v) c += kind(v) == VertexKind::ReticulationVertex;
  return c;
}

std::vector<int> Network::reticulations() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (kind(v) == VertexKind::ReticulationVertex) out.push_back(v);
  return out;
}

std::vector<int> Network::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (kind(v) == VertexKind::Leaf) out.push_back(v);
  return out;
}

std::vector<int> Network::topological_order() const {
  std::vector<int> indeg(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) indeg[v] = static_cast<int>(parents_[v].size());
  std::vector<int> order;
  std::deque<int> ready;
  for (int v = 0; v < n_; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (int c : children_[u])
      if (--indeg[c] == 0) ready.push_back(c);
  }
  if (static_cast<int>(order.size()) != n_) throw std::logic_error("topological_order: graph has a cycle");
  return order;
}

ValidationReport validate(const Network& net) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };
  const int n = net.vertex_count();
  if (n < 2) fail("fewer than two vertices");

  std::set<Edge> seen;
  for (const auto& e : net.edges()) {
    if (e.first == e.second) fail("self-loop at vertex " + std::to_string(e.first));
    if (!seen.insert(e).second)
      fail("parallel edge " + std::to_string(e.first) + "->" + std::to_string(e.second));
  }

  int sources = 0;
  for (int v = 0; v < n; ++v)
    if (net.parents(v).empty()) ++sources;
  if (sources != 1) fail("expected exactly one vertex of indegree 0, found " + std::to_string(sources));
  if (n > 0 && net.kind(net.root()) != VertexKind::Root) fail("root must have indegree 0 and outdegree 1");

  std::vector<int> labels;
  for (int v = 0; v < n; ++v) {
    const VertexKind k = net.kind(v);
    if (k == VertexKind::Invalid)
      fail("vertex " + std::to_string(v) + " has indegree " + std::to_string(net.parents(v).size()) +
           " and outdegree " + std::to_string(net.children(v).size()));
    if (k == VertexKind::Leaf) {
      if (net.label(v) <= 0) fail("leaf " + std::to_string(v) + " is unlabeled");
      labels.push_back(net.label(v));
    } else if (net.label(v) != 0) {
      fail("non-leaf vertex " + std::to_string(v) + " carries a label");
    }
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1) {
      fail("leaf labels are not a bijection onto 1..l");
      break;
    }

  try {
    (void)net.topological_order();
  } catch (const std::logic_error&) {
    fail("edge relation has a directed cycle");
    return rep;
  }
  if (n > 0) {
    std::vector<bool> vis(static_cast<std::size_t>(n), false);
    std::vector<int> stack{net.root()};
    vis[net.root()] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int c : net.children(u))
        if (!vis[c]) {
          vis[c] = true;
          stack.push_back(c);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!vis[v]) fail("vertex " + std::to_string(v) + " is unreachable from the root");
  }
  return rep;
}

std::vector<std::vector<bool>> reachability(const Network& net) {
  const int n = net.vertex_count();
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  auto order = net.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int u = *it;
    reach[u][u] = true;
    for (int c : net.children(u))
      for (int w = 0; w < n; ++w)
        if (reach[c][w]) reach[u][w] = true;
  }
  return reach;
}

bool is_tree_child(const Network& net) {
  for (int v = 0; v < net.vertex_count(); ++v) {
    const auto& ch = net.children(v);
    if (ch.empty()) continue;
    bool ok = false;
    for (int c : ch)
      if (net.kind(c) != VertexKind::ReticulationVertex) ok = true;
    if (!ok) return false;
  }
  return true;
}

bool is_normal(const Network& net) {
  if (!is_tree_child(net)) return false;
  auto reach = reachability(net);
  for (int r : net.reticulations()) {
    const int a = net.parents(r)[0], b = net.parents(r)[1];
    if (reach[a][b] || reach[b][a]) return false;
  }
  return true;
}

namespace {

// Max flow from s to t with unit edge capacities, stopping once `need` is
// reached. Only edges whose interior endpoints satisfy `interior` are used.
int unit_flow(const Network& net, int s, int t, int need, const std::vector<bool>& interior) {
  struct Arc {
    int to, cap, rev;
  };
  const int n = net.vertex_count();
  std::vector<std::vector<Arc>> g(static_cast<std::size_t>(n));
  for (const auto& [u, v] : net.edges()) {
    if (u != s && !interior[u]) continue;
    if (v != t && !interior[v]) continue;
    g[u].push_back({v, 1, static_cast<int>(g[v].size())});
    g[v].push_back({u, 0, static_cast<int>(g[u].size()) - 1});
  }
  int flow = 0;
  while (flow < need) {
    std::vector<std::pair<int, int>> prev(static_cast<std::size_t>(n), {-1, -1});
    std::deque<int> q{s};
    prev[s] = {s, -1};
    while (!q.empty() && prev[t].first < 0) {
      int u = q.front();
      q.pop_front();
      for (int i = 0; i < static_cast<int>(g[u].size()); ++i) {
        const Arc& a = g[u][i];
        if (a.cap > 0 && prev[a.to].first < 0) {
          prev[a.to] = {u, i};
          q.push_back(a.to);
        }
      }
    }
    if (prev[t].first < 0) break;
    for (int v = t; v != s; v = prev[v].first) {
      Arc& a = g[prev[v].first][prev[v].second];
      a.cap -= 1;
      g[v][a.rev].cap += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_galled(const Network& net) {
  const int n = net.vertex_count();
  std::vector<bool> tree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) tree[v] = net.kind(v) == VertexKind::TreeVertex;
  for (int r : net.reticulations()) {
    bool in_cycle = false;
    for (int s = 0; s < n && !in_cycle; ++s)
      if (tree[s] && unit_flow(net, s, r, 2, tree) >= 2) in_cycle = true;
    if (!in_cycle) return false;
  }
  return true;
}

bool is_reticulation_visible(const Network& net) {
  const int n = net.vertex_count();
  const auto leaves = net.leaves();
  for (int r : net.reticulations()) {
    std::vector<bool> vis(static_cast<std::size_t>(n), false);
    std::vector<int> stack{net.root()};
    vis[net.root()] = true;
    vis[r] = true;  // deleted
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int c : net.children(u))
        if (!vis[c]) {
          vis[c] = true;
          stack.push_back(c);
        }
    }
    bool visible = false;
    for (int x : leaves)
      if (!vis[x]) visible = true;
    if (!visible) return false;
  }
  return true;
}

bool is_one_component(const Network& net) {
  for (int r : net.reticulations())
    if (net.kind(net.children(r)[0]) != VertexKind::Leaf) return false;
  return true;
}

}  // namespace phylocount::netcore
