#include "entangle/matroid.hpp"

#include <numeric>
#include <string>

namespace entangle {

namespace {

void check_ground_size(int n) {
  if (n < 0) throw input_error("matroid ground set size must be nonnegative");
  if (n > caps().max_vertices) {
    throw cap_error("matroid ground set size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(caps().max_vertices));
  }
}

// Component count of the spanning subgraph (V(g), edge subset).
int component_count(const Graph& g, Vs edge_subset) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = g.n;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (!contains(edge_subset, e)) continue;
    int ru = find(g.edges[e].first);
    int rv = find(g.edges[e].second);
    if (ru == rv) continue;
    parent[ru] = rv;
    --components;
  }
  return components;
}

int gf2_rank(const std::vector<Vs>& columns, Vs subset) {
  std::vector<Vs> basis;
  for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
    if (!contains(subset, i)) continue;
    Vs v = columns[i];
    for (Vs b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

}  // namespace

Matroid uniform_matroid(int n, int r) {
  check_ground_size(n);
  if (r < 0 || r > n) {
    throw input_error("uniform matroid rank must lie between 0 and the ground set size");
  }
  Matroid m;
  m.n = n;
  m.rank_table.resize(std::size_t{1} << n);
  for (Vs s = 0; s < (Vs{1} << n); ++s) {
    m.rank_table[s] = std::min(popcount(s), r);
  }
  return m;
}

Matroid graphic_matroid(const Graph& g) {
  int n = static_cast<int>(g.edges.size());
  check_ground_size(n);
  Matroid m;
  m.n = n;
  m.rank_table.resize(std::size_t{1} << n);
  for (Vs s = 0; s < (Vs{1} << n); ++s) {
    m.rank_table[s] = g.n - component_count(g, s);
  }
  return m;
}

Matroid binary_matroid(const std::vector<std::vector<int>>& columns) {
  int n = static_cast<int>(columns.size());
  check_ground_size(n);
  std::size_t dimension = n == 0 ? 0 : columns[0].size();
  if (dimension > 64) throw input_error("binary matroid columns longer than 64 entries");
  std::vector<Vs> packed(n, 0);
  for (int i = 0; i < n; ++i) {
    if (columns[i].size() != dimension) {
      throw input_error("binary matroid columns must all have the same length");
    }
    for (std::size_t row = 0; row < dimension; ++row) {
      int entry = columns[i][row];
      if (entry != 0 && entry != 1) {
        throw input_error("binary matroid entries must be 0 or 1");
      }
      if (entry) packed[i] |= bit(static_cast<int>(row));
    }
  }
  Matroid m;
  m.n = n;
  m.rank_table.resize(std::size_t{1} << n);
  for (Vs s = 0; s < (Vs{1} << n); ++s) {
    m.rank_table[s] = gf2_rank(packed, s);
  }
  return m;
}

std::optional<std::string> verify_matroid_rank_axioms(const Matroid& m) {
  Vs count = Vs{1} << m.n;
  if (m.rank_table.size() != count) {
    return "rank table has " + std::to_string(m.rank_table.size()) +
           " entries, expected " + std::to_string(count);
  }
  if (m.rank(0) != 0) {
    return "rank of the empty set is " + std::to_string(m.rank(0));
  }
  for (Vs s = 0; s < count; ++s) {
    for (int e = 0; e < m.n; ++e) {
      if (contains(s, e)) continue;
      int delta = m.rank(s | bit(e)) - m.rank(s);
      if (delta < 0 || delta > 1) {
        return "adding element " + std::to_string(e) + " to " + mask_to_string(s) +
               " changes the rank by " + std::to_string(delta);
      }
    }
  }
  for (Vs s = 0; s < count; ++s) {
    for (Vs t = s + 1; t < count; ++t) {
      if (m.rank(s | t) + m.rank(s & t) > m.rank(s) + m.rank(t)) {
        return "submodularity fails for " + mask_to_string(s) + " and " + mask_to_string(t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace entangle
