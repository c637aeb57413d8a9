#include "entangle/graph.hpp"

#include <algorithm>
#include <map>

namespace entangle {

Vs Graph::neighborhood(Vs s) const {
  Vs out = 0;
  Vs rest = s;
  while (rest) {
    int v = lowest_bit(rest);
    rest &= rest - 1;
    out |= adj[v];
  }
  return out & ~s;
}

bool Graph::any_edge_between(Vs a, Vs b) const {
  Vs rest = a;
  while (rest) {
    int v = lowest_bit(rest);
    rest &= rest - 1;
    if (adj[v] & b) return true;
  }
  return false;
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges,
                  std::vector<std::pair<int, int>> blue) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  if (n > 64) {
    throw cap_error("vertex count " + std::to_string(n) + " exceeds the 64-bit set representation");
  }
  auto normalize = [n](std::vector<std::pair<int, int>>& list, const char* what) {
    for (auto& [u, v] : list) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw input_error(std::string(what) + " endpoint out of range: (" + std::to_string(u) +
                          ", " + std::to_string(v) + ") with n = " + std::to_string(n));
      }
      if (u == v) {
        throw input_error(std::string(what) + " (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") is a self-loop");
      }
      if (u > v) std::swap(u, v);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  };
  normalize(edges, "edge");
  normalize(blue, "blue edge");
  for (const auto& e : blue) {
    if (!std::binary_search(edges.begin(), edges.end(), e)) {
      throw input_error("blue edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                        ") is not an edge of the graph");
    }
  }
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.blue = std::move(blue);
  g.adj.assign(n, 0);
  for (const auto& [u, v] : g.edges) {
    g.adj[u] |= bit(v);
    g.adj[v] |= bit(u);
  }
  return g;
}

Graph farey(int k) {
  if (k < 1) throw input_error("farey order must be at least 1");
  // F_k has 4 * 2^(k-1) vertices; beyond k = 5 that exceeds the id range.
  if (k > 5) throw cap_error("farey(" + std::to_string(k) + ") needs more than 64 vertices");
  int n = 4;
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
  std::vector<std::pair<int, int>> blue = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  for (int gen = 2; gen <= k; ++gen) {
    std::vector<std::pair<int, int>> next_blue;
    for (const auto& [u, v] : blue) {
      int w = n++;
      edges.emplace_back(u, w);
      edges.emplace_back(v, w);
      next_blue.emplace_back(u, w);
      next_blue.emplace_back(v, w);
    }
    blue = std::move(next_blue);
  }
  return build_graph(n, std::move(edges), std::move(blue));
}

Graph wheel(int r) {
  if (r < 3) throw input_error("wheel rim length must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i) {
    edges.emplace_back(i, (i + 1) % r);
    edges.emplace_back(i, r);
  }
  return build_graph(r + 1, std::move(edges));
}

std::vector<Vs> components_after_deletion(const Graph& g, Vs x) {
  std::vector<Vs> comps;
  Vs unseen = g.vertices() & ~x;
  while (unseen) {
    int start = lowest_bit(unseen);
    Vs comp = bit(start);
    Vs frontier = comp;
    while (frontier) {
      Vs grown = 0;
      Vs rest = frontier;
      while (rest) {
        int v = lowest_bit(rest);
        rest &= rest - 1;
        grown |= g.adj[v];
      }
      frontier = grown & unseen & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    unseen &= ~comp;
  }
  return comps;
}

Graph relabel(const Graph& g, const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != g.n) {
    throw input_error("permutation has " + std::to_string(pi.size()) + " entries, expected " +
                      std::to_string(g.n));
  }
  Vs seen = 0;
  for (int v : pi) {
    if (v < 0 || v >= g.n || contains(seen, v)) {
      throw input_error("relabeling is not a bijection on 0.." + std::to_string(g.n - 1));
    }
    seen |= bit(v);
  }
  auto map_pairs = [&pi](const std::vector<std::pair<int, int>>& list) {
    std::vector<std::pair<int, int>> out;
    out.reserve(list.size());
    for (const auto& [u, v] : list) out.emplace_back(pi[u], pi[v]);
    return out;
  };
  return build_graph(g.n, map_pairs(g.edges), map_pairs(g.blue));
}

Graph path_graph(int n) {
  if (n < 1) throw input_error("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw input_error("complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, std::move(edges));
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw input_error("grid needs positive dimensions");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return build_graph(rows * cols, std::move(edges));
}

Graph bowtie() {
  return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph glued_k4s() {
  return build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                         {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  return components_after_deletion(g, 0).size() == 1;
}

}  // namespace entangle
