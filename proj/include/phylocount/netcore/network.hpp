#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phylocount::netcore {

enum class VertexKind { Root, Leaf, TreeVertex, ReticulationVertex, Invalid };

const char* kind_name(VertexKind k);

using Edge = std::pair<int, int>;

/// Rooted binary phylogenetic network. Vertices are 0..n-1; leaf labels are
/// stored per vertex (0 = unlabeled). Construction only checks that edge
/// endpoints are in range, so malformed networks can still be passed to
/// validate() for a diagnosis.
class Network {
 public:
  Network() = default;
  Network(int vertex_count, std::vector<Edge> edges, std::vector<int> labels, int root);

  int vertex_count() const { return n_; }
  int root() const { return root_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  const std::vector<int>& parents(int v) const { return parents_[v]; }
  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }

  VertexKind kind(int v) const;
  int leaf_count() const;
  int reticulation_count() const;
  std::vector<int> reticulations() const;
  std::vector<int> leaves() const;

  /// Vertices in an order where every parent precedes its children. Throws
  /// std::logic_error on a directed cycle.
  std::vector<int> topological_order() const;

 private:
  int n_ = 0;
  int root_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

ValidationReport validate(const Network& net);

bool is_tree_child(const Network& net);
bool is_normal(const Network& net);
bool is_galled(const Network& net);
bool is_reticulation_visible(const Network& net);
/// Every reticulation vertex is directly followed by a leaf.
bool is_one_component(const Network& net);

/// reach[u][v]: v is reachable from u by a directed path (u reaches itself).
std::vector<std::vector<bool>> reachability(const Network& net);

}  // namespace phylocount::netcore
