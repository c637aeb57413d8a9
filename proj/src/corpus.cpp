#include "entangle/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace entangle {

namespace {

// Index of the unordered pair {i, j} in the upper-triangle enumeration
// (0,1), (0,2), (1,2), (0,3), ... column by column.
int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

Vs permuted_mask(Vs mask, int n, const std::vector<int>& pi) {
  Vs out = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (contains(mask, pair_index(i, j))) out |= bit(pair_index(pi[i], pi[j]));
    }
  }
  return out;
}

Vs canonical_mask(Vs mask, int n) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  Vs best = permuted_mask(mask, n, pi);
  while (std::next_permutation(pi.begin(), pi.end())) {
    best = std::min(best, permuted_mask(mask, n, pi));
  }
  return best;
}

Graph mask_to_graph(Vs mask, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (contains(mask, pair_index(i, j))) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, std::move(edges));
}

}  // namespace

Vs canonical_edge_mask(const Graph& g) {
  if (g.n > 8) {
    throw cap_error("canonical form enumerates permutations; needs at most 8 vertices, got " +
                    std::to_string(g.n));
  }
  Vs mask = 0;
  for (auto [u, v] : g.edges) mask |= bit(pair_index(u, v));
  return canonical_mask(mask, g.n);
}

std::vector<CorpusEntry> named_corpus() {
  std::vector<CorpusEntry> out;
  for (int k = 1; k <= 3; ++k) {
    out.push_back({"farey-" + std::to_string(k), farey(k)});
  }
  for (int r = 3; r <= 8; ++r) {
    out.push_back({"wheel-" + std::to_string(r), wheel(r)});
  }
  for (int n = 2; n <= 8; ++n) {
    out.push_back({"path-" + std::to_string(n), path_graph(n)});
  }
  for (int n = 3; n <= 8; ++n) {
    out.push_back({"cycle-" + std::to_string(n), cycle_graph(n)});
  }
  out.push_back({"grid-2x2", grid_graph(2, 2)});
  out.push_back({"grid-2x3", grid_graph(2, 3)});
  out.push_back({"grid-3x3", grid_graph(3, 3)});
  out.push_back({"bowtie", bowtie()});
  out.push_back({"glued-k4s", glued_k4s()});
  return out;
}

std::vector<CorpusEntry> exhaustive_connected(int max_n) {
  if (max_n < 0) {
    throw input_error("corpus bound must be nonnegative");
  }
  if (max_n > 7) {
    throw cap_error("exhaustive corpus generation is capped at 7 vertices, got " +
                    std::to_string(max_n));
  }
  std::vector<CorpusEntry> out;
  // Vertex augmentation: every connected graph on n >= 2 vertices arises
  // from a connected graph on n-1 vertices (drop a non-cutvertex) by
  // attaching a fresh vertex to a nonempty neighborhood.
  std::vector<Vs> level = {0};  // K1
  for (int n = 1; n <= max_n; ++n) {
    int index = 0;
    for (Vs mask : level) {
      out.push_back({"g" + std::to_string(n) + "-" + std::to_string(index++),
                     mask_to_graph(mask, n)});
    }
    if (n == max_n) break;
    std::set<Vs> next;
    for (Vs mask : level) {
      for (Vs attach = 1; attach < (Vs{1} << n); ++attach) {
        Vs grown = mask;
        for (int v = 0; v < n; ++v) {
          if (contains(attach, v)) grown |= bit(pair_index(v, n));
        }
        next.insert(canonical_mask(grown, n + 1));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return out;
}

std::vector<CorpusEntry> corpus(int max_n) {
  std::vector<CorpusEntry> out = named_corpus();
  std::vector<CorpusEntry> exhaustive = exhaustive_connected(max_n);
  out.insert(out.end(), std::make_move_iterator(exhaustive.begin()),
             std::make_move_iterator(exhaustive.end()));
  return out;
}

}  // namespace entangle
