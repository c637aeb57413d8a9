#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "entangle/entanglement.hpp"
#include "entangle/graph.hpp"
#include "entangle/matroid.hpp"
#include "entangle/separation.hpp"
#include "entangle/serialize.hpp"
#include "entangle/tangle.hpp"
#include "entangle/treedec.hpp"

using namespace entangle;

namespace {

Graph star5() { return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }

bool same_graph(const Graph& g, const Graph& h) {
  return g.n == h.n && g.edges == h.edges && g.blue == h.blue;
}

Matroid fano_matroid() {
  std::vector<std::vector<int>> columns;
  for (int v = 1; v <= 7; ++v) columns.push_back({v & 1, (v >> 1) & 1, (v >> 2) & 1});
  return binary_matroid(columns);
}

}  // namespace

TEST_CASE("graphs round-trip through JSON identically") {
  std::vector<Graph> zoo = {path_graph(1), path_graph(4),   cycle_graph(5), wheel(5),
                            farey(1),      farey(2),        farey(3),       bowtie(),
                            glued_k4s(),   grid_graph(2, 3), grid_graph(3, 3), star5(),
                            complete_graph(5)};
  for (const Graph& g : zoo) {
    CAPTURE(g.n);
    ordered_json j = graph_to_json(g);
    CHECK(same_graph(graph_from_json(j), g));
    CHECK(graph_to_json(graph_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("graph JSON text is pinned and canonical") {
  CHECK(graph_to_json(bowtie()).dump() ==
        R"({"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[3,4]],"blue":[]})");
  CHECK(graph_to_json(farey(1)).dump() ==
        R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[2,3]],"blue":[[0,1],[0,3],[1,2],[2,3]]})");

  // Unsorted input normalizes to the same bytes on re-emission.
  ordered_json scrambled = parse_json_text(R"({"n": 3, "edges": [[1, 2], [0, 1]]})");
  Graph g = graph_from_json(scrambled);
  CHECK(graph_to_json(g).dump() == R"({"n":3,"edges":[[0,1],[1,2]],"blue":[]})");
}

TEST_CASE("graph parser rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"([1, 2])")), input_error);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"edges": []})")), input_error);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"n": 2, "edges": [], "foo": 1})")),
                  input_error);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"n": 2.5, "edges": []})")), input_error);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"n": 2, "edges": [[0]]})")), input_error);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"n": 2, "edges": [[0, 1, 1]]})")),
                  input_error);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"n": 2, "edges": [[0, 5]]})")), input_error);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"n": 2, "edges": [], "blue": [[0, 1]]})")),
                  input_error);
  // "blue" may be omitted.
  CHECK(graph_from_json(parse_json_text(R"({"n": 2, "edges": [[0, 1]]})")).blue.empty());
}

TEST_CASE("separations serialize canonically and reject bad sides") {
  Separation cut = make_separation(bit(0) | bit(1) | bit(2), bit(0) | bit(3) | bit(4));
  CHECK(separation_to_json(cut).dump() == R"({"a":[0,1,2],"b":[0,3,4]})");

  // Side order in the input does not matter.
  Separation parsed = separation_from_json(parse_json_text(R"({"a": [0,3,4], "b": [0,1,2]})"), 5);
  CHECK(parsed == cut);

  CHECK_THROWS_AS(separation_from_json(parse_json_text(R"({"a": [0], "b": [0]})"), 5),
                  input_error);
  CHECK_THROWS_AS(separation_from_json(parse_json_text(R"({"a": [0], "b": [7]})"), 5),
                  input_error);
  CHECK_THROWS_AS(separation_from_json(parse_json_text(R"({"a": [0], "b": [-1]})"), 5),
                  input_error);
  CHECK_THROWS_AS(separation_from_json(parse_json_text(R"({"a": [0]})"), 5), input_error);
  CHECK_THROWS_AS(separation_from_json(parse_json_text(R"({"a": 3, "b": [0]})"), 5), input_error);
}

TEST_CASE("families round-trip and normalize member order") {
  Graph g = farey(2);
  SeparationFamily fam = friendly(g);
  REQUIRE(!fam.members.empty());
  ordered_json j = family_to_json(fam);
  CHECK(family_from_json(j, g.n) == fam);

  // Reversed and duplicated members normalize back to the canonical family.
  ordered_json reversed;
  reversed["members"] = ordered_json::array();
  for (auto it = fam.members.rbegin(); it != fam.members.rend(); ++it) {
    reversed["members"].push_back(separation_to_json(*it));
    reversed["members"].push_back(separation_to_json(*it));
  }
  CHECK(family_from_json(reversed, g.n) == fam);

  CHECK(family_from_json(parse_json_text(R"({"members": []})"), g.n).members.empty());
  CHECK_THROWS_AS(family_from_json(parse_json_text(R"({"members": 3})"), g.n), input_error);
  CHECK_THROWS_AS(family_from_json(parse_json_text(R"({})"), g.n), input_error);
}

TEST_CASE("tangle JSON lists the universe orientation in canonical order") {
  std::vector<Tangle> trivial = enumerate_tangles(path_graph(2), 1);
  REQUIRE(trivial.size() == 1);
  CHECK(tangle_to_json(trivial[0]).dump() ==
        R"({"k":1,"orientation":[{"small":[],"big":[0,1]}]})");

  for (const Tangle& t : enumerate_tangles(bowtie(), 2)) {
    ordered_json j = tangle_to_json(t);
    CHECK(j.at("k") == 2);
    REQUIRE(j.at("orientation").size() == t.universe.size());
    for (std::size_t i = 0; i < t.universe.size(); ++i) {
      CHECK(ids_to_mask(j.at("orientation")[i].at("small").get<std::vector<int>>(), 64) ==
            t.small_side(i));
    }
  }
}

TEST_CASE("matroid JSON dispatches on kind") {
  Matroid u = matroid_from_json(parse_json_text(R"({"kind": "uniform", "n": 4, "r": 2})"));
  CHECK(u.rank_table == uniform_matroid(4, 2).rank_table);

  ordered_json graphic;
  graphic["kind"] = "graphic";
  graphic["graph"] = graph_to_json(bowtie());
  CHECK(matroid_from_json(graphic).rank_table == graphic_matroid(bowtie()).rank_table);

  ordered_json binary;
  binary["kind"] = "binary";
  binary["columns"] = ordered_json::array();
  for (int v = 1; v <= 7; ++v) {
    binary["columns"].push_back(std::vector<int>{v & 1, (v >> 1) & 1, (v >> 2) & 1});
  }
  CHECK(matroid_from_json(binary).rank_table == fano_matroid().rank_table);

  CHECK_THROWS_AS(matroid_from_json(parse_json_text(R"({"kind": "frob"})")), input_error);
  CHECK_THROWS_AS(matroid_from_json(parse_json_text(R"({"kind": "uniform", "n": 4})")),
                  input_error);
  CHECK_THROWS_AS(
      matroid_from_json(parse_json_text(R"({"kind": "uniform", "n": 4, "r": 2, "columns": []})")),
      input_error);
  CHECK_THROWS_AS(matroid_from_json(parse_json_text(R"({"kind": "binary", "columns": [[0, 2]]})")),
                  input_error);
}

TEST_CASE("tree-decomposition JSON mirrors the structure fields") {
  Graph g = bowtie();
  TreeDecomposition t = build_tree_decomposition(g, friendly(g));
  ordered_json j = treedec_to_json(t);
  REQUIRE(j.at("bags").size() == 2);
  CHECK(j.at("tree_edges").dump() == "[[0,1]]");
  CHECK(j.at("edge_separations")[0].dump() == R"({"a":[0,1,2],"b":[0,3,4]})");
  std::vector<std::vector<int>> bags = j.at("bags").get<std::vector<std::vector<int>>>();
  std::sort(bags.begin(), bags.end());
  CHECK(bags == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}});
  CHECK(treedec_to_json(t).dump() == j.dump());
}

TEST_CASE("axiom violation witnesses serialize with their full anatomy") {
  Graph c4 = cycle_graph(4);
  Separation half = make_separation(bit(0) | bit(1) | bit(2), bit(0) | bit(2) | bit(3));
  auto violation = check_axiom_E(c4, make_family({half}));
  REQUIRE(violation.has_value());
  ordered_json j = axiom_violation_to_json(*violation);
  for (const char* key : {"member", "crossing", "side", "corner_first", "corner_second"}) {
    CHECK(j.contains(key));
  }
  CHECK(separation_from_json(j.at("member"), c4.n) == half);
  // The violated side is one of the member's own sides.
  Vs side = ids_to_mask(j.at("side").get<std::vector<int>>(), c4.n);
  CHECK((side == half.a || side == half.b));
}

TEST_CASE("json text parsing maps failures to input errors") {
  CHECK_THROWS_AS(parse_json_text("{"), input_error);
  CHECK_THROWS_AS(parse_json_text(""), input_error);
  CHECK(parse_json_text("[1, 2]").is_array());
}
