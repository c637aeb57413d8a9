#include "entangle/tangle.hpp"

#include <algorithm>

namespace entangle {

namespace {

// Coverage of a vertex set: the vertices themselves plus every edge with both
// endpoints inside. Edge bits are split over two words (n <= 12 caps the
// edge count at 66).
struct CoverMask {
  Vs verts = 0;
  std::uint64_t e0 = 0;
  std::uint64_t e1 = 0;

  CoverMask merged(const CoverMask& o) const {
    return CoverMask{verts | o.verts, e0 | o.e0, e1 | o.e1};
  }
  bool operator==(const CoverMask&) const = default;
};

CoverMask cover_of(const Graph& g, Vs side) {
  CoverMask m;
  m.verts = side;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (contains(side, u) && contains(side, v)) {
      if (i < 64) {
        m.e0 |= std::uint64_t{1} << i;
      } else {
        m.e1 |= std::uint64_t{1} << (i - 64);
      }
    }
  }
  return m;
}

struct Search {
  const Graph& g;
  CoverMask full;
  const std::vector<Separation>& universe;
  std::vector<std::size_t> proper_idx;     // indices of proper members
  std::vector<CoverMask> side_cover[2];    // per member: cover of side a / b
  std::vector<CoverMask> smalls;           // covers of all committed small sides
  std::vector<std::uint8_t> big_is_b;      // orientation under construction
  std::vector<std::vector<std::uint8_t>> results;
  long long nodes = 0;

  // A new small side is admissible if no single, pair, or triple of committed
  // small sides including it covers the whole graph. Triples entirely inside
  // the previously committed set were vetted when their members were pushed.
  bool admits(const CoverMask& c) const {
    if (c == full) return false;
    for (std::size_t i = 0; i < smalls.size(); ++i) {
      CoverMask pair = c.merged(smalls[i]);
      if (pair == full) return false;
      for (std::size_t j = i + 1; j < smalls.size(); ++j) {
        if (pair.merged(smalls[j]) == full) return false;
      }
    }
    return true;
  }

  void run(std::size_t depth) {
    if (++nodes > 10'000'000) {
      throw cap_error("tangle search exceeded the node budget");
    }
    if (depth == proper_idx.size()) {
      results.push_back(big_is_b);
      return;
    }
    std::size_t m = proper_idx[depth];
    // Big side a (the lexicographically smaller side) is explored first.
    for (int big_a_first = 0; big_a_first < 2; ++big_a_first) {
      bool big_is_b_choice = big_a_first == 1;
      const CoverMask& small = big_is_b_choice ? side_cover[0][depth] : side_cover[1][depth];
      if (!admits(small)) continue;
      big_is_b[m] = big_is_b_choice;
      smalls.push_back(small);
      run(depth + 1);
      smalls.pop_back();
    }
  }
};

}  // namespace

std::vector<Tangle> enumerate_tangles(const Graph& g, int k) {
  if (k < 1) throw input_error("tangle order must be at least 1");
  if (k > caps().max_tangle_order) {
    throw cap_error("tangle order " + std::to_string(k) + " exceeds the cap of " +
                    std::to_string(caps().max_tangle_order));
  }
  if (g.n > caps().max_vertices) {
    throw cap_error("tangle enumeration needs at most " + std::to_string(caps().max_vertices) +
                    " vertices, got " + std::to_string(g.n));
  }
  std::vector<Separation> universe = enumerate_separations(g, k - 1);
  Search search{g, cover_of(g, g.vertices()), universe, {}, {}, {}, {}, {}, 0};
  search.big_is_b.assign(universe.size(), 0);
  Vs v = g.vertices();
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const Separation& s = universe[i];
    if (is_proper(s)) {
      search.proper_idx.push_back(i);
      search.side_cover[0].push_back(cover_of(g, s.a));
      search.side_cover[1].push_back(cover_of(g, s.b));
    } else {
      // Improper member {V, B}: orient toward V, commit B as a small side.
      Vs small = s.a == v ? s.b : s.a;
      search.big_is_b[i] = s.b == v;
      CoverMask c = cover_of(g, small);
      if (!search.admits(c)) return {};
      search.smalls.push_back(c);
    }
  }
  search.run(0);
  std::sort(search.results.begin(), search.results.end());
  std::vector<Tangle> out;
  out.reserve(search.results.size());
  for (auto& orientation : search.results) {
    out.push_back(Tangle{k, universe, std::move(orientation)});
  }
  return out;
}

namespace {

// Shared prefix length of the two universes; throws if they disagree, which
// means the tangles come from different graphs.
std::size_t common_prefix(const Tangle& t1, const Tangle& t2) {
  std::size_t n = std::min(t1.universe.size(), t2.universe.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(t1.universe[i] == t2.universe[i])) {
      throw contract_error("tangles of different graphs cannot be compared");
    }
  }
  return n;
}

}  // namespace

bool distinguishable(const Tangle& t1, const Tangle& t2) {
  std::size_t n = common_prefix(t1, t2);
  for (std::size_t i = 0; i < n; ++i) {
    if (t1.big_is_b[i] != t2.big_is_b[i]) return true;
  }
  return false;
}

std::vector<Separation> efficient_distinguishers(const Graph& g, const Tangle& t1,
                                                 const Tangle& t2) {
  std::size_t n = common_prefix(t1, t2);
  int best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (t1.big_is_b[i] != t2.big_is_b[i]) {
      int ord = t1.universe[i].order();
      if (best < 0 || ord < best) best = ord;
    }
  }
  if (best < 0) {
    throw contract_error("efficient distinguishers need a distinguishable pair");
  }
  std::vector<Separation> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (t1.big_is_b[i] != t2.big_is_b[i] && t1.universe[i].order() == best) {
      if (!is_separation_of(g, t1.universe[i])) {
        throw contract_error("tangle universe does not belong to this graph");
      }
      out.push_back(t1.universe[i]);
    }
  }
  return out;
}

}  // namespace entangle
