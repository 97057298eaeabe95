#include "phylocount/netcore/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace phylocount::netcore {
namespace {

struct Search {
  const ColoredDigraph& g;
  std::vector<std::vector<std::pair<int, int>>> out, in;
  CanonicalForm best;
  bool have_best = false;

  explicit Search(const ColoredDigraph& graph) : g(graph) {
    out.resize(static_cast<std::size_t>(g.n));
    in.resize(static_cast<std::size_t>(g.n));
    for (const auto& a : g.arcs) {
      if (a.from < 0 || a.from >= g.n || a.to < 0 || a.to >= g.n)
        throw std::invalid_argument("canonical_form: arc endpoint out of range");
      out[a.from].push_back({a.to, a.multiplicity});
      in[a.to].push_back({a.from, a.multiplicity});
    }
  }

  // Replaces colors by ranks of (color, out-neighbour colors, in-neighbour
  // colors) until the number of classes stops growing.
  void refine(std::vector<long>& color) const {
    std::size_t classes = 0;
    for (;;) {
      std::vector<std::vector<long>> sig(static_cast<std::size_t>(g.n));
      for (int v = 0; v < g.n; ++v) {
        auto& s = sig[v];
        s.push_back(color[v]);
        std::vector<std::pair<long, int>> o, i;
        for (auto [w, m] : out[v]) o.push_back({color[w], m});
        for (auto [w, m] : in[v]) i.push_back({color[w], m});
        std::sort(o.begin(), o.end());
        std::sort(i.begin(), i.end());
        s.push_back(static_cast<long>(o.size()));
        for (auto [c, m] : o) {
          s.push_back(c);
          s.push_back(m);
        }
        s.push_back(static_cast<long>(i.size()));
        for (auto [c, m] : i) {
          s.push_back(c);
          s.push_back(m);
        }
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < g.n; ++v)
        color[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
      if (sorted.size() == classes) return;
      classes = sorted.size();
    }
  }

  void leaf(const std::vector<long>& color) {
    CanonicalForm f;
    f.order.assign(static_cast<std::size_t>(g.n), -1);
    for (int v = 0; v < g.n; ++v) f.order[color[v]] = v;
    f.code.push_back(g.n);
    for (int p = 0; p < g.n; ++p) {
      const int v = f.order[p];
      f.code.push_back(g.color[v]);
      std::vector<std::pair<long, int>> o;
      for (auto [w, m] : out[v]) o.push_back({color[w], m});
      std::sort(o.begin(), o.end());
      f.code.push_back(static_cast<long>(o.size()));
      for (auto [c, m] : o) {
        f.code.push_back(c);
        f.code.push_back(m);
      }
    }
    if (!have_best || f.code < best.code) {
      best = std::move(f);
      best.leaves_at_minimum = 1;
      have_best = true;
    } else if (f.code == best.code) {
      ++best.leaves_at_minimum;
    }
  }

  void run(std::vector<long> color) {
    refine(color);
    std::vector<int> count(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) ++count[color[v]];
    long target = -1;
    for (int c = 0; c < g.n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(color);
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if (color[v] != target) continue;
      std::vector<long> next(color.size());
      for (int w = 0; w < g.n; ++w) next[w] = 2 * color[w];
      next[v] -= 1;
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const ColoredDigraph& g) {
  if (static_cast<int>(g.color.size()) != g.n) throw std::invalid_argument("canonical_form: color vector size mismatch");
  Search s(g);
  if (g.n == 0) {
    s.best.code = {0};
    s.best.leaves_at_minimum = 1;
    return s.best;
  }
  // initial colors are arbitrary values; ranking them keeps the search
  // independent of vertex numbering
  std::vector<long> ranks = g.color;
  auto sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& c : ranks) c = std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin();
  s.run(std::move(ranks));
  return s.best;
}

std::string code_string(const std::vector<long>& code) {
  std::string s;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(code[i]);
  }
  return s;
}

ColoredDigraph colored_digraph(const Network& net) {
  ColoredDigraph g;
  g.n = net.vertex_count();
  for (int v = 0; v < g.n; ++v) g.color.push_back(static_cast<long>(net.kind(v)) * 1000000L + net.label(v));
  for (const auto& [u, v] : net.edges()) g.arcs.push_back({u, v, 1});
  return g;
}

std::string canonical_code(const Network& net) { return code_string(canonical_form(colored_digraph(net)).code); }

ColoredDigraph colored_digraph(const DagPattern& p) {
  ColoredDigraph g;
  g.n = p.m;
  for (int v = 0; v < p.m; ++v) g.color.push_back(v == p.root ? 0 : 1);
  for (const auto& [e, k] : p.mult) g.arcs.push_back({e.first, e.second, k});
  return g;
}

std::string canonical_code(const DagPattern& p) { return code_string(canonical_form(colored_digraph(p)).code); }

ColoredDigraph colored_digraph(const ComponentGraph& cg) {
  ColoredDigraph g;
  g.n = cg.vertex_count;
  for (int c = 0; c < cg.vertex_count; ++c)
    g.color.push_back(c == cg.root ? 0L : cg.terminal_label[c] != 0 ? 2000000L + cg.terminal_label[c] : 1L);
  for (const auto& e : cg.edges) g.arcs.push_back({e.from, e.to, e.arrow ? 2 : 1});
  for (int c = 0; c < cg.vertex_count; ++c)
    for (int x : cg.attached_leaves[c]) {
      g.color.push_back(1000000L + x);
      g.arcs.push_back({c, g.n++, 1});
    }
  return g;
}

std::string canonical_code(const ComponentGraph& cg) { return code_string(canonical_form(colored_digraph(cg)).code); }

}  // namespace phylocount::netcore
