#pragma once

#include <string>
#include <vector>

#include "phylocount/netcore/component_graph.hpp"
#include "phylocount/netcore/dag_pattern.hpp"
#include "phylocount/netcore/network.hpp"

namespace phylocount::netcore {

struct Arc {
  int from;
  int to;
  int multiplicity;
};

/// Vertex-colored directed multigraph; the input to canonical_form.
struct ColoredDigraph {
  int n = 0;
  std::vector<long> color;
  std::vector<Arc> arcs;
};

struct CanonicalForm {
  std::vector<long> code;
  std::vector<int> order;     // order[i] = vertex placed at position i
  long leaves_at_minimum = 0;  // equals the automorphism group order
};

/// Color refinement plus individualization of the first non-singleton cell,
/// exploring the whole search tree and keeping the lexicographically least
/// code. Exponential in the worst case; meant for graphs of a few dozen
/// vertices.
CanonicalForm canonical_form(const ColoredDigraph& g);

std::string code_string(const std::vector<long>& code);

/// Vertex colors encode kind and leaf label, so equal codes mean isomorphic
/// as leaf-labeled rooted DAGs.
ColoredDigraph colored_digraph(const Network& net);
std::string canonical_code(const Network& net);

/// The root is colored apart from the other vertices.
ColoredDigraph colored_digraph(const DagPattern& p);
std::string canonical_code(const DagPattern& p);

/// Attached leaves become labeled vertices and arrowed edges multiplicity-2
/// arcs, so equal codes mean the same component graph up to renumbering.
ColoredDigraph colored_digraph(const ComponentGraph& cg);
std::string canonical_code(const ComponentGraph& cg);

}  // namespace phylocount::netcore
