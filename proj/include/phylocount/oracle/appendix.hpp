#pragma once

// Maximally reticulated reticulation-visible networks: the r-value of a
// tree-child component graph, the decompression of binary tree-child
// networks with l - 1 reticulations into RV networks with 3l - 3, and the
// exhaustive check of the maximum.

#include <string>
#include <vector>

#include "phylocount/netcore/component_graph.hpp"
#include "phylocount/netcore/network.hpp"
#include "phylocount/numeric.hpp"

namespace phylocount::oracle {

/// Tree-child for DAGs of any degree: every vertex with children has a child
/// of indegree at most 1.
bool is_tree_child_general(const netcore::Network& net);

/// Replaces every vertex of indegree 2 and outdegree >= 2 by a reticulation
/// followed by a tree vertex that takes over the children.
netcore::Network normalize_reticulations(const netcore::Network& net);

/// Moves children a and b of v (outdegree >= 3) below a new tree vertex.
netcore::Network split_multifurcation(const netcore::Network& net, int v, int a, int b);

/// Largest number of reticulations over RV networks with this stripped
/// component graph: after normalizing and contracting the root edge, the
/// number of reticulations plus the number of edges joining two
/// non-reticulations. Equals 2l + k - 2 on binary tree-child networks.
/// Throws std::invalid_argument for input that is not tree-child.
int r_value(const netcore::Network& net);

/// Replaces every tree vertex of a binary tree-child network with
/// l - 1 reticulations by the one-component network with two leaves and one
/// reticulation, putting the double edge towards the non-reticulation child.
/// The result is reticulation-visible with 3l - 3 reticulations. Throws
/// std::invalid_argument for other input.
netcore::Network decompress_max_ret(const netcore::Network& tc);

/// The arrowed component graph decompress_max_ret(tc) must have: each
/// reticulation merged with its child, arrows on the edges from tree
/// vertices to their non-reticulation children.
netcore::ComponentGraph expected_component_graph(const netcore::Network& tc);

struct MaxRetReport {
  int l = 0;
  int max_k = -1;
  long count_at_max = 0;
  long tc_max_count = 0;
  bool exhaustive = false;  // max_k found by enumerating every k in budget
  bool ok = false;
  std::vector<std::string> notes;
};

/// l <= 2: every k inside the vertex budget is enumerated. l = 3: TC_{3,2}
/// is enumerated and each network decompressed; the images are checked to
/// be valid, reticulation-visible, pairwise non-isomorphic, and to have the
/// expected component graph.
MaxRetReport max_ret_check(int l, int threads = 1);

/// a_1, the zero of Ai closest to the origin, by bracketing root-finding.
double airy_a1();

/// l^{-2/3} exp(a_1 (3l)^{1/3}) (12/e^2)^l l^{2l} in log space.
LogValue airy_theta_eval(long l);

}  // namespace phylocount::oracle
