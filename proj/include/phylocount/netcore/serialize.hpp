#pragma once

#include <json.hpp>
#include <string>

#include "phylocount/netcore/component_graph.hpp"
#include "phylocount/netcore/dag_pattern.hpp"
#include "phylocount/netcore/network.hpp"

namespace phylocount::netcore {

// Layouts are described in docs/schema.md.
nlohmann::json to_json(const Network& net);
Network network_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ComponentGraph& cg);
nlohmann::json to_json(const DagPattern& p);
DagPattern pattern_from_json(const nlohmann::json& j);

std::string to_dot(const Network& net, const std::string& name = "network");
std::string to_dot(const ComponentGraph& cg, const std::string& name = "component_graph");
std::string to_dot(const DagPattern& p, long automorphisms, const std::string& name = "pattern");

}  // namespace phylocount::netcore
