#include "phylocount/netcore/component_graph.hpp"

#include <algorithm>
#include <tuple>

namespace phylocount::netcore {

int ComponentGraph::weighted_indegree(int c) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.to == c) d += e.arrow ? 2 : 1;
  return d;
}

std::vector<int> ComponentGraph::in_edges(int c) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].to == c) out.push_back(i);
  return out;
}

std::vector<int> ComponentGraph::out_edges(int c) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].from == c) out.push_back(i);
  return out;
}

int ComponentGraph::arrow_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const CgEdge& e) { return e.arrow; }));
}

ComponentGraph component_graph(const Network& net) {
  ComponentGraph cg;
  const int n = net.vertex_count();
  cg.component_of.assign(static_cast<std::size_t>(n), -1);
  cg.head.push_back(net.root());
  for (int r : net.reticulations()) cg.head.push_back(r);
  cg.vertex_count = static_cast<int>(cg.head.size());
  for (int c = 0; c < cg.vertex_count; ++c) cg.component_of[cg.head[c]] = c;

  for (int v : net.topological_order()) {
    if (cg.component_of[v] >= 0) continue;
    cg.component_of[v] = cg.component_of[net.parents(v)[0]];
  }

  for (int c = 1; c < cg.vertex_count; ++c) {
    const int r = cg.head[c];
    const int a = cg.component_of[net.parents(r)[0]];
    const int b = cg.component_of[net.parents(r)[1]];
    if (a == b) {
      cg.edges.push_back({a, c, true});
    } else {
      cg.edges.push_back({std::min(a, b), c, false});
      cg.edges.push_back({std::max(a, b), c, false});
    }
  }
  std::sort(cg.edges.begin(), cg.edges.end(),
            [](const CgEdge& x, const CgEdge& y) { return std::tie(x.from, x.to) < std::tie(y.from, y.to); });

  cg.attached_leaves.assign(static_cast<std::size_t>(cg.vertex_count), {});
  cg.terminal_label.assign(static_cast<std::size_t>(cg.vertex_count), 0);
  for (int x : net.leaves()) cg.attached_leaves[cg.component_of[x]].push_back(net.label(x));
  for (int c = 0; c < cg.vertex_count; ++c) {
    auto& leaves = cg.attached_leaves[c];
    std::sort(leaves.begin(), leaves.end());
    if (c == cg.root || leaves.size() != 1 || !cg.out_edges(c).empty()) continue;
    const auto in = cg.in_edges(c);
    if (in.size() == 1 && cg.edges[in[0]].arrow) {
      cg.terminal_label[c] = leaves[0];
      leaves.clear();
    }
  }
  return cg;
}

bool stripped_is_tree(const ComponentGraph& cg) {
  for (int c = 0; c < cg.vertex_count; ++c) {
    const auto in = cg.in_edges(c);
    if (c == cg.root ? !in.empty() : in.size() != 1) return false;
  }
  return true;
}

bool stripped_is_rv_shape(const ComponentGraph& cg) {
  // Vertices of the stripped graph: components plus one vertex per attached
  // leaf. A component carrying a terminal label is itself a leaf.
  const int m = cg.vertex_count;
  std::vector<int> indeg(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> comp_children(static_cast<std::size_t>(m));
  for (const auto& e : cg.edges) {
    ++indeg[e.to];
    comp_children[e.from].push_back(e.to);
  }
  auto is_leaf = [&](int c) { return cg.terminal_label[c] != 0; };
  for (int c = 0; c < m; ++c) {
    if (indeg[c] > 2) return false;
    if (is_leaf(c)) continue;
    const auto& kids = comp_children[c];
    const int pendant = static_cast<int>(cg.attached_leaves[c].size());
    const int outdeg = static_cast<int>(kids.size()) + pendant;
    bool has_non_ret_child = pendant > 0;
    for (int d : kids)
      if (indeg[d] < 2) has_non_ret_child = true;
    if (outdeg > 0 && !has_non_ret_child) return false;
    if (indeg[c] == 2 && outdeg == 1 && kids.size() == 1 && indeg[kids[0]] == 1 && !is_leaf(kids[0]))
      return false;
  }
  return true;
}

}  // namespace phylocount::netcore
