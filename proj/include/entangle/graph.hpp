#pragma once

#include <utility>
#include <vector>

#include "entangle/common.hpp"

namespace entangle {

// Finite simple graph on dense ids 0..n-1. Edges are stored as (u, v) with
// u < v, sorted lexicographically; blue is a subset of edges with the same
// ordering (only the Farey generator produces blue marks). Immutable after
// construction.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> blue;
  std::vector<Vs> adj;  // adjacency masks, one per vertex

  Vs vertices() const { return full_mask(n); }
  bool has_edge(int u, int v) const { return u != v && contains(adj[u], v); }

  // Neighborhood of the set s, excluding s itself.
  Vs neighborhood(Vs s) const;

  // True if there is an edge with one endpoint in a and the other in b.
  bool any_edge_between(Vs a, Vs b) const;
};

// Normalizes and validates: endpoints in range, no self-loops, duplicates
// collapsed, blue a subset of edges. Ids above 63 exceed the mask width.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges,
                  std::vector<std::pair<int, int>> blue = {});

// Farey graph F_k. F_1 is the 4-cycle 0-1-2-3 with all cycle edges blue plus
// the non-blue chord {0, 2}. Each later generation walks the blue edges in
// lexicographic order, appends a fresh vertex joined to both endpoints by two
// new blue edges, and clears the mark on the old edge. Vertex numbering is
// therefore deterministic: generation g appends its vertices in that order.
Graph farey(int k);

// Wheel: rim cycle 0..r-1 plus hub r adjacent to every rim vertex.
Graph wheel(int r);

// Connected components of G - x, each as a vertex mask, ordered by smallest
// contained id. x = V(G) yields the empty list.
std::vector<Vs> components_after_deletion(const Graph& g, Vs x);

// Image of g under the permutation pi (vertex i becomes pi[i]); blue marks
// carried along. pi must be a bijection on 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& pi);

// Named small families used by the corpus and the examples.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);
// Two triangles {0,1,2} and {0,3,4} sharing the cut vertex 0.
Graph bowtie();
// Two K4 blocks {0,1,2,3} and {2,3,4,5} glued on the edge {2,3}.
Graph glued_k4s();

bool is_connected(const Graph& g);

}  // namespace entangle
