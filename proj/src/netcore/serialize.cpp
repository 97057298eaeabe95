#include "phylocount/netcore/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace phylocount::netcore {

nlohmann::json to_json(const Network& net) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < net.vertex_count(); ++v) {
    nlohmann::json jv = {{"id", v}, {"kind", kind_name(net.kind(v))}};
    if (net.label(v) != 0) jv["label"] = net.label(v);
    vertices.push_back(std::move(jv));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : net.edges()) edges.push_back({u, v});
  return {{"schema", "phylocount.network/1"},
          {"root", net.root()},
          {"leaves", net.leaf_count()},
          {"reticulations", net.reticulation_count()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

Network network_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != "phylocount.network/1") throw std::invalid_argument("network JSON: unknown schema");
  const auto& jv = j.at("vertices");
  const int n = static_cast<int>(jv.size());
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  for (const auto& v : jv) {
    const int id = v.at("id").get<int>();
    if (id < 0 || id >= n) throw std::invalid_argument("network JSON: vertex id out of range");
    labels[id] = v.value("label", 0);
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Network(n, std::move(edges), std::move(labels), j.at("root").get<int>());
}

nlohmann::json to_json(const ComponentGraph& cg) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int c = 0; c < cg.vertex_count; ++c) {
    nlohmann::json jv = {{"id", c}, {"head", cg.head[c]}, {"leaves", cg.attached_leaves[c]}};
    if (cg.terminal_label[c] != 0) jv["terminal_label"] = cg.terminal_label[c];
    vertices.push_back(std::move(jv));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : cg.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"arrow", e.arrow}});
  return {{"schema", "phylocount.component_graph/1"},
          {"root", cg.root},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

nlohmann::json to_json(const DagPattern& p) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [e, k] : p.mult) edges.push_back({{"from", e.first}, {"to", e.second}, {"multiplicity", k}});
  return {{"schema", "phylocount.dag_pattern/1"}, {"m", p.m}, {"root", p.root}, {"edges", std::move(edges)}};
}

DagPattern pattern_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != "phylocount.dag_pattern/1") throw std::invalid_argument("pattern JSON: unknown schema");
  DagPattern p;
  p.m = j.at("m").get<int>();
  p.root = j.at("root").get<int>();
  for (const auto& e : j.at("edges"))
    p.mult[{e.at("from").get<int>(), e.at("to").get<int>()}] = e.at("multiplicity").get<int>();
  return p;
}

std::string to_dot(const Network& net, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < net.vertex_count(); ++v) {
    os << "  v" << v << " [";
    switch (net.kind(v)) {
      case VertexKind::Leaf: os << "shape=plaintext,label=\"" << net.label(v) << "\""; break;
      case VertexKind::ReticulationVertex: os << "shape=box,label=\"\""; break;
      case VertexKind::Root: os << "shape=point"; break;
      default: os << "shape=circle,label=\"\""; break;
    }
    os << "];\n";
  }
  for (const auto& [u, v] : net.edges()) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ComponentGraph& cg, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int c = 0; c < cg.vertex_count; ++c) {
    os << "  c" << c << " [label=\"";
    if (cg.terminal_label[c] != 0) os << cg.terminal_label[c];
    os << "\"];\n";
    for (int x : cg.attached_leaves[c]) {
      os << "  x" << x << " [shape=plaintext,label=\"" << x << "\"];\n";
      os << "  c" << c << " -> x" << x << " [arrowhead=none];\n";
    }
  }
  for (const auto& e : cg.edges)
    os << "  c" << e.from << " -> c" << e.to << (e.arrow ? "" : " [arrowhead=none]") << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const DagPattern& p, long automorphisms, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  label=\"m(G)=" << automorphisms << "\";\n";
  for (int v = 0; v < p.m; ++v) os << "  p" << v << (v == p.root ? " [shape=doublecircle]" : "") << ";\n";
  for (const auto& [e, k] : p.mult)
    os << "  p" << e.first << " -> p" << e.second << (k == 2 ? " [style=bold,label=\"2\"]" : "") << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace phylocount::netcore
