#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entangle/common.hpp"
#include "entangle/entanglement.hpp"
#include "entangle/graph.hpp"
#include "entangle/separation.hpp"
#include "entangle/tangle.hpp"

namespace entangle {

// Tree-decomposition of a graph: a tree over node indices 0..bags.size()-1,
// one bag per node, and per tree edge the separation of G induced by the two
// halves of the tree. Edges are stored with the smaller node index first;
// edge_separations runs parallel to tree_edges.
struct TreeDecomposition {
  std::vector<Vs> bags;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<Separation> edge_separations;
};

// The tree-decomposition defined by a nested family: nodes are the
// down-closed consistent orientations of n (ordered lexicographically by
// orientation vector over the canonically sorted members), two nodes are
// adjacent iff they differ by reversing exactly one member, and the bag of a
// node is the intersection of all sides its orientation points to. Every
// member of n is induced by exactly one tree edge. Members must be proper
// separations of g; a crossing pair in n is a contract violation.
TreeDecomposition build_tree_decomposition(const Graph& g, const SeparationFamily& n);

struct TreeDecompositionIssue {
  std::string description;
};

// Checks the tree-decomposition axioms in a fixed order: tree shape, vertex
// coverage, edge coverage, subtree connectivity per vertex, and agreement of
// each stored edge separation with the union of bags on either side of its
// tree edge. Returns the first issue found, or nothing.
std::optional<TreeDecompositionIssue> validate_tree_decomposition(const Graph& g,
                                                                  const TreeDecomposition& t);

// ok iff every distinguishable pair of tangles of orders at most k is
// distinguished by some member of n whose order equals the minimum
// distinguishing order of the pair. Returns the first failing pair.
std::optional<std::pair<Tangle, Tangle>> check_efficient_distinguishing(
    const Graph& g, const SeparationFamily& n, int k);

// DOT rendering: nodes labeled with bag contents, edges labeled with the
// adhesion (the intersection of the two bags).
std::string tree_decomposition_dot(const TreeDecomposition& t);

}  // namespace entangle
