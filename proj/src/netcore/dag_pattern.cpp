#include "phylocount/netcore/dag_pattern.hpp"

#include <deque>

namespace phylocount::netcore {

int DagPattern::multiplicity(int u, int v) const {
  auto it = mult.find({u, v});
  return it == mult.end() ? 0 : it->second;
}

int DagPattern::indegree(int v) const {
  int d = 0;
  for (const auto& [e, k] : mult)
    if (e.second == v) d += k;
  return d;
}

std::vector<int> DagPattern::children(int v) const {
  std::vector<int> out;
  for (const auto& [e, k] : mult)
    if (e.first == v) out.push_back(e.second);
  return out;
}

int DagPattern::double_children(int v) const {
  int c = 0;
  for (const auto& [e, k] : mult)
    if (e.first == v && k == 2) ++c;
  return c;
}

bool DagPattern::is_tree_shaped() const {
  std::vector<int> parents(static_cast<std::size_t>(m), 0);
  for (const auto& [e, k] : mult) ++parents[e.second];
  for (int v = 0; v < m; ++v)
    if (v != root && parents[v] != 1) return false;
  return true;
}

bool is_valid_pattern(const DagPattern& p, std::string* why) {
  auto fail = [why](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (p.m < 1 || p.root < 0 || p.root >= p.m) return fail("bad vertex count or root");
  std::vector<int> indeg(static_cast<std::size_t>(p.m), 0);
  std::vector<std::vector<int>> ch(static_cast<std::size_t>(p.m));
  for (const auto& [e, k] : p.mult) {
    if (e.first < 0 || e.first >= p.m || e.second < 0 || e.second >= p.m) return fail("edge endpoint out of range");
    if (e.first == e.second) return fail("self-loop");
    if (k != 1 && k != 2) return fail("multiplicity outside {1,2}");
    indeg[e.second] += k;
    ch[e.first].push_back(e.second);
  }
  for (int v = 0; v < p.m; ++v) {
    if (v == p.root && indeg[v] != 0) return fail("root has incoming edges");
    if (v != p.root && indeg[v] != 2) return fail("non-root vertex without weighted indegree 2");
  }
  // Kahn's algorithm from the root doubles as the reachability check
  std::vector<int> remaining = indeg;
  std::deque<int> q{p.root};
  int seen = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    ++seen;
    for (int c : ch[u])
      if ((remaining[c] -= p.multiplicity(u, c)) == 0) q.push_back(c);
  }
  if (seen != p.m) return fail("cycle or unreachable vertex");
  return true;
}

namespace {

struct AutSearch {
  const DagPattern& p;
  std::vector<std::vector<int>> adj;  // adjacency matrix with multiplicities
  std::vector<std::pair<int, int>> degree;
  std::vector<int> image;
  std::vector<bool> used;
  long count = 0;

  explicit AutSearch(const DagPattern& pat) : p(pat) {
    adj.assign(static_cast<std::size_t>(p.m), std::vector<int>(static_cast<std::size_t>(p.m), 0));
    degree.assign(static_cast<std::size_t>(p.m), {0, 0});
    for (const auto& [e, k] : p.mult) {
      adj[e.first][e.second] = k;
      degree[e.first].first += k;
      degree[e.second].second += k;
    }
    image.assign(static_cast<std::size_t>(p.m), -1);
    used.assign(static_cast<std::size_t>(p.m), false);
  }

  bool consistent(int v, int w) const {
    if (degree[v] != degree[w]) return false;
    if (adj[v][v] != adj[w][w]) return false;
    for (int u = 0; u < p.m; ++u) {
      if (image[u] < 0 || u == v) continue;
      if (adj[u][v] != adj[image[u]][w] || adj[v][u] != adj[w][image[u]]) return false;
    }
    return true;
  }

  void extend(int v) {
    if (v == p.m) {
      ++count;
      return;
    }
    if (v == p.root) {
      extend(v + 1);
      return;
    }
    for (int w = 0; w < p.m; ++w) {
      if (used[w] || !consistent(v, w)) continue;
      image[v] = w;
      used[w] = true;
      extend(v + 1);
      used[w] = false;
      image[v] = -1;
    }
  }
};

}  // namespace

long automorphism_count(const DagPattern& p) {
  AutSearch s(p);
  s.image[p.root] = p.root;
  s.used[p.root] = true;
  s.extend(0);
  return s.count;
}

}  // namespace phylocount::netcore
