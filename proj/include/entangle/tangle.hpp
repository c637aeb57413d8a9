#pragma once

#include <vector>

#include "entangle/common.hpp"
#include "entangle/graph.hpp"
#include "entangle/separation.hpp"

namespace entangle {

// Orientation of every separation of order < k such that no three small sides
// cover the graph: for all members (repetition allowed) the union of the
// induced subgraphs on the small sides never equals G on both vertices and
// edges. The universe is shared canonical data: all separations of order < k
// in (order, a, b) order; big_is_b[i] records whether the big side of
// universe[i] is its b side. Universes for smaller k are prefixes of those
// for larger k, which is what makes tangles of different orders comparable.
struct Tangle {
  int k = 0;
  std::vector<Separation> universe;
  std::vector<std::uint8_t> big_is_b;

  Vs small_side(std::size_t i) const { return big_is_b[i] ? universe[i].a : universe[i].b; }
  Vs big_side(std::size_t i) const { return big_is_b[i] ? universe[i].b : universe[i].a; }
};

// All tangles of order exactly k, by backtracking over the orientations of
// the proper members with incremental cover-condition pruning. Improper
// members {V, B} are forced to point toward V: a small side V would cover G
// by itself. Deterministic output, sorted by orientation vector.
std::vector<Tangle> enumerate_tangles(const Graph& g, int k);

// True iff some separation oriented by both tangles is oriented oppositely.
bool distinguishable(const Tangle& t1, const Tangle& t2);

// The separations oriented oppositely by the two tangles whose order equals
// the minimum over all such separations. Calling this on an indistinguishable
// pair is a contract violation.
std::vector<Separation> efficient_distinguishers(const Graph& g, const Tangle& t1,
                                                 const Tangle& t2);

}  // namespace entangle
