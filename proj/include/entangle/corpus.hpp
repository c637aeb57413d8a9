#pragma once

#include <string>
#include <vector>

#include "entangle/common.hpp"
#include "entangle/graph.hpp"

namespace entangle {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

// Upper-triangle edge mask of g minimized over all vertex relabelings; two
// graphs get the same mask exactly when they are isomorphic. Brute force
// over n! permutations, so n is capped at 8; pair indices fit 64 bits.
Vs canonical_edge_mask(const Graph& g);

// The stable named families: Farey 1-3, wheels 3-8, paths 2-8, cycles 3-8,
// grids up to 3x3, the bowtie and the glued K4s. Order and names never
// change across runs.
std::vector<CorpusEntry> named_corpus();

// All connected graphs on 1..max_n vertices up to isomorphism, one canonical
// representative each, generated by vertex augmentation. Ordered by vertex
// count, then by canonical edge mask. max_n is capped at 7.
std::vector<CorpusEntry> exhaustive_connected(int max_n);

// named_corpus() followed by exhaustive_connected(max_n).
std::vector<CorpusEntry> corpus(int max_n);

}  // namespace entangle
