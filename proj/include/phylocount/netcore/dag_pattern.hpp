#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace phylocount::netcore {

/// Unlabeled rooted DAG whose edges carry multiplicity 1 or 2.
struct DagPattern {
  int m = 1;
  int root = 0;
  std::map<std::pair<int, int>, int> mult;  // (u, v) -> 1 or 2

  int multiplicity(int u, int v) const;
  int indegree(int v) const;  // counted with multiplicity
  std::vector<int> children(int v) const;
  /// Children reached by a double edge.
  int double_children(int v) const;
  bool is_tree_shaped() const;  // every non-root vertex has a single parent
};

/// Checks the pattern invariants: root of indegree 0, every other vertex of
/// weighted indegree 2, multiplicities in {1, 2}, acyclic, all reachable.
bool is_valid_pattern(const DagPattern& p, std::string* why = nullptr);

/// Order of the automorphism group (root fixed, multiplicities preserved) by
/// exhaustive search over vertex permutations.
long automorphism_count(const DagPattern& p);

}  // namespace phylocount::netcore
