#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phylocount/netcore/network.hpp"

namespace phylocount::oracle {

inline constexpr int kVertexBudget = 14;

struct EnumerationJob {
  int leaves = 1;
  int reticulations = 0;
  int threads = 1;

  int vertex_budget() const { return 2 * leaves + 2 * reticulations; }
};

/// All leaf-labeled binary networks with the given leaf and reticulation
/// counts, one per isomorphism class, sorted by canonical code.
///
/// Networks are grown bottom-up from the labeled leaves: each step adds a
/// tree vertex above two distinct vertices that still lack a parent, or a
/// reticulation above one such vertex. Partial structures are deduplicated
/// by canonical code after every step, and the root is added last.
std::vector<netcore::Network> enumerate_networks(const EnumerationJob& job);

struct ClassCounts {
  long pn = 0;
  long rv = 0;
  long gn = 0;
  long tc = 0;
  long normal = 0;
};

ClassCounts count_by_class(int leaves, int reticulations, int threads = 1);

/// Name -> predicate for the classes accepted by --class.
std::function<bool(const netcore::Network&)> class_predicate(const std::string& name);

}  // namespace phylocount::oracle
