#include "phylocount/oracle/appendix.hpp"

#include <algorithm>
#include <boost/math/special_functions/airy.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <set>
#include <stdexcept>

#include "phylocount/netcore/canonical.hpp"
#include "phylocount/oracle/enumerate.hpp"

namespace phylocount::oracle {

using netcore::ComponentGraph;
using netcore::Edge;
using netcore::Network;
using netcore::VertexKind;

bool is_tree_child_general(const Network& net) {
  for (int v = 0; v < net.vertex_count(); ++v) {
    const auto& kids = net.children(v);
    if (kids.empty()) continue;
    if (std::none_of(kids.begin(), kids.end(), [&](int c) { return net.parents(c).size() <= 1; })) return false;
  }
  return true;
}

Network normalize_reticulations(const Network& net) {
  int n = net.vertex_count();
  std::vector<int> labels = net.labels();
  std::vector<int> moved(static_cast<std::size_t>(n), -1);  // v -> new tree vertex below v
  for (int v = 0; v < net.vertex_count(); ++v)
    if (net.parents(v).size() >= 2 && net.children(v).size() >= 2) {
      moved[v] = n++;
      labels.push_back(0);
    }
  std::vector<Edge> edges;
  for (const auto& [u, v] : net.edges()) edges.emplace_back(moved[u] >= 0 ? moved[u] : u, v);
  for (int v = 0; v < net.vertex_count(); ++v)
    if (moved[v] >= 0) edges.emplace_back(v, moved[v]);
  return Network(n, std::move(edges), std::move(labels), net.root());
}

Network split_multifurcation(const Network& net, int v, int a, int b) {
  const auto& kids = net.children(v);
  if (kids.size() < 3 || a == b || std::count(kids.begin(), kids.end(), a) != 1 ||
      std::count(kids.begin(), kids.end(), b) != 1)
    throw std::invalid_argument("split_multifurcation: need two distinct children of a vertex with outdegree >= 3");
  const int w = net.vertex_count();
  std::vector<Edge> edges;
  for (const auto& e : net.edges())
    if (!(e.first == v && (e.second == a || e.second == b))) edges.push_back(e);
  edges.emplace_back(v, w);
  edges.emplace_back(w, a);
  edges.emplace_back(w, b);
  std::vector<int> labels = net.labels();
  labels.push_back(0);
  return Network(w + 1, std::move(edges), std::move(labels), net.root());
}

int r_value(const Network& input) {
  if (!is_tree_child_general(input)) throw std::invalid_argument("r_value: network is not tree-child");
  const Network net = normalize_reticulations(input);
  net.topological_order();  // rejects cycles
  const int root = net.root();
  const bool contract = net.children(root).size() == 1;
  int r = 0;
  for (int v = 0; v < net.vertex_count(); ++v)
    if (net.parents(v).size() >= 2) ++r;
  for (const auto& [u, v] : net.edges()) {
    if (contract && u == root) continue;
    if (net.parents(u).size() <= 1 && net.parents(v).size() <= 1) ++r;
  }
  return r;
}

namespace {

// For a tree vertex of a maximal binary tree-child network: its reticulation
// child and its other child.
std::pair<int, int> split_children(const Network& tc, int v) {
  const auto& kids = tc.children(v);
  const bool first_ret = tc.kind(kids[0]) == VertexKind::ReticulationVertex;
  return first_ret ? std::pair{kids[0], kids[1]} : std::pair{kids[1], kids[0]};
}

void require_maximal_tree_child(const Network& tc) {
  const auto report = netcore::validate(tc);
  if (!report.ok) throw std::invalid_argument("decompress_max_ret: invalid network");
  if (!netcore::is_tree_child(tc)) throw std::invalid_argument("decompress_max_ret: network is not tree-child");
  const int l = tc.leaf_count();
  if (l < 2 || tc.reticulation_count() != l - 1)
    throw std::invalid_argument("decompress_max_ret: need l >= 2 leaves and l - 1 reticulations");
  for (int v = 0; v < tc.vertex_count(); ++v)
    if (tc.kind(v) == VertexKind::TreeVertex) {
      const auto [ret, other] = split_children(tc, v);
      if (tc.kind(ret) != VertexKind::ReticulationVertex || tc.kind(other) == VertexKind::ReticulationVertex)
        throw std::invalid_argument("decompress_max_ret: a tree vertex lacks exactly one reticulation child");
    }
}

}  // namespace

Network decompress_max_ret(const Network& tc) {
  require_maximal_tree_child(tc);
  const int n = tc.vertex_count();
  // Tree vertex v becomes t1 -> {r, t2}, t2 -> {r, x}: t1 keeps index v and
  // x is the edge from t2 to the image of v's reticulation child.
  std::vector<int> t2(static_cast<std::size_t>(n), -1), dbl(static_cast<std::size_t>(n), -1);
  std::vector<int> labels = tc.labels();
  int next = n;
  for (int v = 0; v < n; ++v)
    if (tc.kind(v) == VertexKind::TreeVertex) {
      t2[v] = next++;
      dbl[v] = next++;
      labels.push_back(0);
      labels.push_back(0);
    }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    switch (tc.kind(v)) {
      case VertexKind::Root:
      case VertexKind::ReticulationVertex:
        edges.emplace_back(v, tc.children(v)[0]);
        break;
      case VertexKind::TreeVertex: {
        const auto [ret, other] = split_children(tc, v);
        edges.emplace_back(v, dbl[v]);
        edges.emplace_back(v, t2[v]);
        edges.emplace_back(t2[v], dbl[v]);
        edges.emplace_back(t2[v], ret);
        edges.emplace_back(dbl[v], other);
        break;
      }
      default:
        break;
    }
  }
  return Network(next, std::move(edges), std::move(labels), tc.root());
}

ComponentGraph expected_component_graph(const Network& tc) {
  require_maximal_tree_child(tc);
  const int n = tc.vertex_count();
  // A component starts at the root's child, at every reticulation, and at
  // every non-reticulation child of a tree vertex; a reticulation's child
  // stays in the reticulation's component.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  ComponentGraph cg;
  for (int v : tc.topological_order()) {
    const auto& ps = tc.parents(v);
    const VertexKind k = tc.kind(v);
    if (k == VertexKind::Root) continue;
    const bool starts = k == VertexKind::ReticulationVertex || tc.kind(ps[0]) != VertexKind::ReticulationVertex;
    comp[v] = starts ? cg.vertex_count++ : comp[ps[0]];
  }
  cg.root = comp[tc.children(tc.root())[0]];
  cg.attached_leaves.assign(static_cast<std::size_t>(cg.vertex_count), {});
  cg.terminal_label.assign(static_cast<std::size_t>(cg.vertex_count), 0);
  for (int v = 0; v < n; ++v) {
    if (tc.kind(v) == VertexKind::Leaf) cg.attached_leaves[comp[v]].push_back(tc.label(v));
    if (tc.kind(v) != VertexKind::TreeVertex) continue;
    const auto [ret, other] = split_children(tc, v);
    cg.edges.push_back({comp[v], comp[ret], false});
    cg.edges.push_back({comp[v], comp[other], true});
  }
  for (int c = 0; c < cg.vertex_count; ++c) {
    auto& leaves = cg.attached_leaves[c];
    std::sort(leaves.begin(), leaves.end());
    const auto in = cg.in_edges(c);
    if (c != cg.root && leaves.size() == 1 && cg.out_edges(c).empty() && in.size() == 1 && cg.edges[in[0]].arrow) {
      cg.terminal_label[c] = leaves[0];
      leaves.clear();
    }
  }
  return cg;
}

MaxRetReport max_ret_check(int l, int threads) {
  if (l < 1 || l > 3) throw std::invalid_argument("max_ret_check: l must lie in [1, 3]");
  MaxRetReport rep;
  rep.l = l;
  if (l <= 2) {
    rep.exhaustive = true;
    const int k_budget = (kVertexBudget - 2 * l) / 2;
    for (int k = 0; k <= k_budget; ++k) {
      long rv = 0, tc = 0;
      for (const auto& net : enumerate_networks({l, k, threads})) {
        rv += netcore::is_reticulation_visible(net);
        if (k == l - 1) tc += netcore::is_tree_child(net);
      }
      if (rv > 0) {
        rep.max_k = k;
        rep.count_at_max = rv;
      }
      if (k == l - 1) rep.tc_max_count = tc;
      rep.notes.push_back("k=" + std::to_string(k) + ": " + std::to_string(rv) + " reticulation-visible");
    }
    rep.ok = rep.max_k == 3 * l - 3 && rep.count_at_max == rep.tc_max_count && k_budget > 3 * l - 3;
    return rep;
  }
  std::set<std::string> codes;
  bool all_ok = true;
  for (const auto& tc : enumerate_networks({l, l - 1, threads})) {
    if (!netcore::is_tree_child(tc)) continue;
    ++rep.tc_max_count;
    const Network img = decompress_max_ret(tc);
    const bool valid = netcore::validate(img).ok && netcore::is_reticulation_visible(img) &&
                       img.reticulation_count() == 3 * l - 3 && img.leaf_count() == l;
    const bool round_trip = netcore::canonical_code(netcore::component_graph(img)) ==
                            netcore::canonical_code(expected_component_graph(tc));
    if (!valid) rep.notes.push_back("invalid image of " + netcore::canonical_code(tc));
    if (!round_trip) rep.notes.push_back("component graph mismatch for " + netcore::canonical_code(tc));
    all_ok = all_ok && valid && round_trip;
    if (valid) codes.insert(netcore::canonical_code(img));
  }
  rep.count_at_max = static_cast<long>(codes.size());
  rep.max_k = 3 * l - 3;
  rep.notes.push_back("max_k taken from the decompression images; larger k is not enumerated at this size");
  rep.ok = all_ok && rep.count_at_max == rep.tc_max_count;
  return rep;
}

double airy_a1() {
  auto ai = [](double x) { return boost::math::airy_ai(x); };
  std::uintmax_t iterations = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(ai, -3.0, -2.0, boost::math::tools::eps_tolerance<double>(52),
                                                          iterations);
  return (lo + hi) / 2;
}

LogValue airy_theta_eval(long l) {
  if (l < 2) throw std::invalid_argument("airy_theta_eval: l must be at least 2");
  const double L = static_cast<double>(l);
  return LogValue::from_log(-2.0 / 3.0 * std::log(L) + airy_a1() * std::cbrt(3.0 * L) + L * (std::log(12.0) - 2.0) +
                            2.0 * L * std::log(L));
}

}  // namespace phylocount::oracle
