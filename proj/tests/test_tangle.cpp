#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "entangle/graph.hpp"
#include "entangle/separation.hpp"
#include "entangle/tangle.hpp"

using namespace entangle;

namespace {

bool triple_covers(const Graph& g, Vs a1, Vs a2, Vs a3) {
  if ((a1 | a2 | a3) != g.vertices()) return false;
  for (auto [u, v] : g.edges) {
    bool covered = false;
    for (Vs side : {a1, a2, a3}) {
      if (contains(side, u) && contains(side, v)) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

// Independent oracle: try all 2^m orientations of the full universe, improper
// members included, and keep those where no three small sides cover G.
// Only usable for tiny universes.
std::vector<std::vector<std::uint8_t>> tangles_by_orientation_filter(const Graph& g, int k) {
  auto universe = enumerate_separations(g, k - 1);
  std::size_t m = universe.size();
  REQUIRE(m <= 13);
  std::vector<std::vector<std::uint8_t>> out;
  for (Vs bits = 0; bits < (Vs{1} << m); ++bits) {
    std::vector<Vs> smalls(m);
    std::vector<std::uint8_t> big_is_b(m);
    for (std::size_t i = 0; i < m; ++i) {
      big_is_b[i] = contains(bits, static_cast<int>(i));
      smalls[i] = big_is_b[i] ? universe[i].a : universe[i].b;
    }
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      for (std::size_t j = i; j < m && ok; ++j) {
        for (std::size_t l = j; l < m && ok; ++l) {
          if (triple_covers(g, smalls[i], smalls[j], smalls[l])) ok = false;
        }
      }
    }
    if (ok) out.push_back(big_is_b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint8_t>> orientations_of(const std::vector<Tangle>& tangles) {
  std::vector<std::vector<std::uint8_t>> out;
  for (const Tangle& t : tangles) out.push_back(t.big_is_b);
  return out;
}

}  // namespace

TEST_CASE("enumeration agrees with the orientation-filter oracle") {
  struct Case {
    Graph g;
    int k;
  };
  std::vector<Case> cases = {
      {path_graph(3), 2}, {path_graph(4), 2},
      {complete_graph(4), 2}, {complete_graph(4), 3},
      {bowtie(), 2},      {cycle_graph(5), 2},
      {build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 2},
  };
  for (const auto& [g, k] : cases) {
    CAPTURE(g.n);
    CAPTURE(k);
    CHECK(orientations_of(enumerate_tangles(g, k)) == tangles_by_orientation_filter(g, k));
  }
}

TEST_CASE("tangle counts on the pinned examples") {
  SUBCASE("every connected graph with an edge has exactly one order-1 tangle") {
    for (const Graph& g : {path_graph(2), path_graph(5), bowtie(), complete_graph(4), wheel(5)}) {
      CHECK(enumerate_tangles(g, 1).size() == 1);
    }
  }
  SUBCASE("bowtie has one order-2 tangle per triangle") {
    auto tangles = enumerate_tangles(bowtie(), 2);
    REQUIRE(tangles.size() == 2);
    // The cut separation is oriented oppositely by the two tangles.
    Separation cut = make_separation(bit(0) | bit(1) | bit(2), bit(0) | bit(3) | bit(4));
    for (std::size_t i = 0; i < tangles[0].universe.size(); ++i) {
      if (tangles[0].universe[i] == cut) {
        CHECK(tangles[0].big_is_b[i] != tangles[1].big_is_b[i]);
      }
    }
  }
  SUBCASE("K4 has a unique tangle of each order up to 3") {
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(k);
      CHECK(enumerate_tangles(complete_graph(4), k).size() == 1);
    }
  }
  SUBCASE("glued K4 blocks carry two order-3 tangles") {
    CHECK(enumerate_tangles(glued_k4s(), 3).size() == 2);
  }
}

TEST_CASE("no tangle member has small side V") {
  for (const Graph& g : {bowtie(), complete_graph(4), glued_k4s()}) {
    for (int k = 1; k <= 3; ++k) {
      for (const Tangle& t : enumerate_tangles(g, k)) {
        for (std::size_t i = 0; i < t.universe.size(); ++i) {
          CHECK(t.small_side(i) != g.vertices());
        }
      }
    }
  }
}

TEST_CASE("no two tangle members have small sides covering G") {
  // Pairwise consistency: the cover condition with repetition makes this a
  // special case, asserted directly on the corpus.
  for (const Graph& g : {bowtie(), glued_k4s(), path_graph(5)}) {
    for (int k = 1; k <= 3; ++k) {
      for (const Tangle& t : enumerate_tangles(g, k)) {
        for (std::size_t i = 0; i < t.universe.size(); ++i) {
          for (std::size_t j = i; j < t.universe.size(); ++j) {
            CHECK_FALSE(triple_covers(g, t.small_side(i), t.small_side(j), t.small_side(j)));
          }
        }
      }
    }
  }
}

TEST_CASE("tangles restrict to tangles of lower order") {
  for (const Graph& g : {bowtie(), complete_graph(4), glued_k4s(), cycle_graph(5)}) {
    for (int k = 2; k <= 3; ++k) {
      auto lower = orientations_of(enumerate_tangles(g, k - 1));
      for (const Tangle& t : enumerate_tangles(g, k)) {
        std::size_t prefix = enumerate_separations(g, k - 2).size();
        std::vector<std::uint8_t> restricted(t.big_is_b.begin(),
                                             t.big_is_b.begin() + prefix);
        CHECK(std::find(lower.begin(), lower.end(), restricted) != lower.end());
      }
    }
  }
}

TEST_CASE("distinguishable") {
  SUBCASE("the bowtie order-2 tangles are distinguishable") {
    auto tangles = enumerate_tangles(bowtie(), 2);
    REQUIRE(tangles.size() == 2);
    CHECK(distinguishable(tangles[0], tangles[1]));
    CHECK_FALSE(distinguishable(tangles[0], tangles[0]));
  }
  SUBCASE("K4 tangles of different orders are indistinguishable") {
    auto t1 = enumerate_tangles(complete_graph(4), 1);
    auto t2 = enumerate_tangles(complete_graph(4), 2);
    auto t3 = enumerate_tangles(complete_graph(4), 3);
    CHECK_FALSE(distinguishable(t1[0], t2[0]));
    CHECK_FALSE(distinguishable(t2[0], t3[0]));
    CHECK_FALSE(distinguishable(t1[0], t3[0]));
  }
  SUBCASE("tangles of different graphs are rejected") {
    auto ta = enumerate_tangles(bowtie(), 2);
    auto tb = enumerate_tangles(complete_graph(4), 2);
    CHECK_THROWS_AS(distinguishable(ta[0], tb[0]), contract_error);
  }
}

TEST_CASE("efficient_distinguishers") {
  SUBCASE("bowtie pair is distinguished by the cut separation at order 1") {
    Graph g = bowtie();
    auto tangles = enumerate_tangles(g, 2);
    REQUIRE(tangles.size() == 2);
    auto eps = efficient_distinguishers(g, tangles[0], tangles[1]);
    REQUIRE(eps.size() == 1);
    CHECK(eps[0] == make_separation(bit(0) | bit(1) | bit(2), bit(0) | bit(3) | bit(4)));
    CHECK(eps[0].order() == 1);
    // Symmetric in the tangle arguments.
    CHECK(efficient_distinguishers(g, tangles[1], tangles[0]) == eps);
  }
  SUBCASE("glued K4 blocks are distinguished at order 2 across the glue edge") {
    Graph g = glued_k4s();
    auto tangles = enumerate_tangles(g, 3);
    REQUIRE(tangles.size() == 2);
    auto eps = efficient_distinguishers(g, tangles[0], tangles[1]);
    REQUIRE_FALSE(eps.empty());
    for (const Separation& s : eps) {
      CHECK(s.order() == 2);
      CHECK(s.separator() == (bit(2) | bit(3)));
    }
  }
  SUBCASE("indistinguishable pairs are a contract violation") {
    auto tangles = enumerate_tangles(complete_graph(4), 2);
    CHECK_THROWS_AS(efficient_distinguishers(complete_graph(4), tangles[0], tangles[0]),
                    contract_error);
  }
}

TEST_CASE("caps and argument validation") {
  CHECK_THROWS_AS(enumerate_tangles(bowtie(), 0), input_error);
  CHECK_THROWS_AS(enumerate_tangles(bowtie(), 5), cap_error);
  Graph big = path_graph(13);
  CHECK_THROWS_AS(enumerate_tangles(big, 2), cap_error);
}
