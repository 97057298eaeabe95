#pragma once

#include <vector>

#include "phylocount/netcore/network.hpp"

namespace phylocount::netcore {

struct CgEdge {
  int from;
  int to;
  bool arrow;  // double edge: both reticulation edges come from `from`

  bool operator==(const CgEdge&) const = default;
};

/// One vertex per tree component. Component 0 holds the network root; the
/// others are headed by reticulations in increasing vertex order.
struct ComponentGraph {
  int vertex_count = 0;
  int root = 0;
  std::vector<CgEdge> edges;
  std::vector<std::vector<int>> attached_leaves;  // sorted labels per component
  std::vector<int> terminal_label;                // 0 when the rule does not apply
  std::vector<int> head;                          // network vertex heading each component
  std::vector<int> component_of;                  // network vertex -> component

  /// Indegree with arrowed edges counted twice.
  int weighted_indegree(int c) const;
  std::vector<int> in_edges(int c) const;
  std::vector<int> out_edges(int c) const;
  int arrow_count() const;
};

ComponentGraph component_graph(const Network& net);

/// With arrows dropped, the component graph is a (non-binary) tree.
bool stripped_is_tree(const ComponentGraph& cg);

/// With arrows dropped, the component graph is a tree-child network whose
/// vertices have indegree at most 2 and in which no reticulation is followed
/// by a single tree vertex.
bool stripped_is_rv_shape(const ComponentGraph& cg);

}  // namespace phylocount::netcore
