#include "bim/graph.hpp"

#include <algorithm>
#include <string>

namespace bim {

std::size_t DirectedGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& nb : in_neighbors) m += nb.size();
  return m;
}

int DirectedGraph::in_slot(int v, int u) const {
  const auto& nb = in_neighbors[v];
  auto it = std::lower_bound(nb.begin(), nb.end(), u);
  if (it == nb.end() || *it != u) return -1;
  return static_cast<int>(it - nb.begin());
}

DirectedGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw LoadError("node count must be at least 1");
  DirectedGraph g;
  g.n = n;
  g.in_neighbors.resize(n);
  g.out_edges.resize(n);
  for (auto [from, to] : edges) {
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw LoadError("edge endpoint out of range: " + std::to_string(from) +
                      "->" + std::to_string(to));
    if (from == to)
      throw LoadError("self-loop rejected at node " + std::to_string(from));
    g.in_neighbors[to].push_back(from);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.in_neighbors[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw LoadError("parallel edge into node " + std::to_string(v));
  }
  for (int v = 0; v < n; ++v)
    for (int slot = 0; slot < g.in_degree(v); ++slot)
      g.out_edges[g.in_neighbors[v][slot]].push_back({v, slot});
  return g;
}

}  // namespace bim
