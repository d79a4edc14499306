#pragma once

#include <utility>
#include <vector>

#include "bim/errors.hpp"

namespace bim {

// Directed influence graph. An edge u->v means u can influence v, i.e.
// u is in the neighbor set N(v) that v's triggering vector ranges over.
struct DirectedGraph {
  struct OutEdge {
    int to;    // target node v
    int slot;  // index of the source inside in_neighbors[to]
  };

  int n = 0;
  std::vector<std::vector<int>> in_neighbors;    // sorted ascending per node
  std::vector<std::vector<OutEdge>> out_edges;   // transpose with slot links

  int in_degree(int v) const { return static_cast<int>(in_neighbors[v].size()); }
  std::size_t edge_count() const;

  // Position of u within in_neighbors[v], or -1.
  int in_slot(int v, int u) const;
};

// Builds and validates the adjacency structure. Rejects self-loops,
// parallel edges, and out-of-range endpoints.
DirectedGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace bim
