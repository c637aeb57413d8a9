#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entangle/common.hpp"
#include "entangle/graph.hpp"

namespace entangle {

// Finite matroid on ground set {0..n-1} with a fully tabulated rank
// function. The ground set size is bounded by caps().max_vertices, which
// keeps the table at 2^n entries.
struct Matroid {
  int n = 0;
  std::vector<int> rank_table;  // indexed by subset mask

  int rank(Vs subset) const { return rank_table[subset]; }
  int full_rank() const { return rank_table[full_mask(n)]; }
};

// U(r, n): rank of a subset is its size capped at r.
Matroid uniform_matroid(int n, int r);

// Cycle matroid of g: elements are the edge indices of g, the rank of an
// edge set is the vertex count minus the number of components it leaves.
Matroid graphic_matroid(const Graph& g);

// Linear matroid over GF(2): element i is column i, each column a 0/1
// vector; rank is the GF(2) rank of the chosen columns.
Matroid binary_matroid(const std::vector<std::vector<int>>& columns);

// Exhaustive rank-axiom check: normalization, monotone unit increase, and
// submodularity over all subset pairs. Returns the first failure.
std::optional<std::string> verify_matroid_rank_axioms(const Matroid& m);

}  // namespace entangle
