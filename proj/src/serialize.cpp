#include "entangle/serialize.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace entangle {

namespace {

void require_object(const ordered_json& j, const char* what,
                    const std::vector<std::string>& required,
                    const std::vector<std::string>& optional = {}) {
  if (!j.is_object()) {
    throw input_error(std::string(what) + " must be a JSON object");
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) {
      throw input_error(std::string(what) + " is missing the \"" + key + "\" key");
    }
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const std::string& key : required) known = known || key == item.key();
    for (const std::string& key : optional) known = known || key == item.key();
    if (!known) {
      throw input_error(std::string(what) + " has an unknown key \"" + item.key() + "\"");
    }
  }
}

int get_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw input_error(std::string(what) + " must be an integer");
  }
  long long v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw input_error(std::string(what) + " is out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> get_id_list(const ordered_json& j, const char* what) {
  if (!j.is_array()) {
    throw input_error(std::string(what) + " must be an array of ids");
  }
  std::vector<int> ids;
  for (const ordered_json& entry : j) ids.push_back(get_int(entry, what));
  return ids;
}

std::vector<std::pair<int, int>> get_pair_list(const ordered_json& j, const char* what) {
  if (!j.is_array()) {
    throw input_error(std::string(what) + " must be an array of pairs");
  }
  std::vector<std::pair<int, int>> pairs;
  for (const ordered_json& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      throw input_error(std::string(what) + " entries must be [u, v] pairs");
    }
    pairs.emplace_back(get_int(entry[0], what), get_int(entry[1], what));
  }
  return pairs;
}

ordered_json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  ordered_json out = ordered_json::array();
  for (auto [u, v] : pairs) out.push_back(ordered_json::array({u, v}));
  return out;
}

}  // namespace

ordered_json graph_to_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.n;
  j["edges"] = pairs_to_json(g.edges);
  j["blue"] = pairs_to_json(g.blue);
  return j;
}

Graph graph_from_json(const ordered_json& j) {
  require_object(j, "graph", {"n", "edges"}, {"blue"});
  int n = get_int(j.at("n"), "graph \"n\"");
  std::vector<std::pair<int, int>> edges = get_pair_list(j.at("edges"), "graph \"edges\"");
  std::vector<std::pair<int, int>> blue;
  if (j.contains("blue")) blue = get_pair_list(j.at("blue"), "graph \"blue\"");
  return build_graph(n, std::move(edges), std::move(blue));
}

ordered_json separation_to_json(const Separation& s) {
  ordered_json j;
  j["a"] = mask_to_ids(s.a);
  j["b"] = mask_to_ids(s.b);
  return j;
}

Separation separation_from_json(const ordered_json& j, int n) {
  require_object(j, "separation", {"a", "b"});
  Vs a = ids_to_mask(get_id_list(j.at("a"), "separation side"), n);
  Vs b = ids_to_mask(get_id_list(j.at("b"), "separation side"), n);
  if (a == b) {
    throw input_error("separation sides must differ");
  }
  return make_separation(a, b);
}

ordered_json family_to_json(const SeparationFamily& fam) {
  ordered_json members = ordered_json::array();
  for (const Separation& s : fam.members) members.push_back(separation_to_json(s));
  ordered_json j;
  j["members"] = members;
  return j;
}

SeparationFamily family_from_json(const ordered_json& j, int n) {
  require_object(j, "family", {"members"});
  if (!j.at("members").is_array()) {
    throw input_error("family \"members\" must be an array");
  }
  std::vector<Separation> members;
  for (const ordered_json& entry : j.at("members")) {
    members.push_back(separation_from_json(entry, n));
  }
  return make_family(std::move(members));
}

ordered_json tangle_to_json(const Tangle& t) {
  ordered_json orientation = ordered_json::array();
  for (std::size_t i = 0; i < t.universe.size(); ++i) {
    ordered_json o;
    o["small"] = mask_to_ids(t.small_side(i));
    o["big"] = mask_to_ids(t.big_side(i));
    orientation.push_back(o);
  }
  ordered_json j;
  j["k"] = t.k;
  j["orientation"] = orientation;
  return j;
}

Matroid matroid_from_json(const ordered_json& j) {
  require_object(j, "matroid", {"kind"}, {"n", "r", "graph", "columns"});
  if (!j.at("kind").is_string()) {
    throw input_error("matroid \"kind\" must be a string");
  }
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "uniform") {
    require_object(j, "uniform matroid", {"kind", "n", "r"});
    return uniform_matroid(get_int(j.at("n"), "matroid \"n\""),
                           get_int(j.at("r"), "matroid \"r\""));
  }
  if (kind == "graphic") {
    require_object(j, "graphic matroid", {"kind", "graph"});
    return graphic_matroid(graph_from_json(j.at("graph")));
  }
  if (kind == "binary") {
    require_object(j, "binary matroid", {"kind", "columns"});
    if (!j.at("columns").is_array()) {
      throw input_error("matroid \"columns\" must be an array of 0/1 arrays");
    }
    std::vector<std::vector<int>> columns;
    for (const ordered_json& col : j.at("columns")) {
      columns.push_back(get_id_list(col, "matroid column"));
    }
    return binary_matroid(columns);
  }
  throw input_error("matroid \"kind\" must be uniform, graphic or binary, got \"" + kind + "\"");
}

ordered_json treedec_to_json(const TreeDecomposition& t) {
  ordered_json bags = ordered_json::array();
  for (Vs bag : t.bags) bags.push_back(mask_to_ids(bag));
  ordered_json seps = ordered_json::array();
  for (const Separation& s : t.edge_separations) seps.push_back(separation_to_json(s));
  ordered_json j;
  j["bags"] = bags;
  j["tree_edges"] = pairs_to_json(t.tree_edges);
  j["edge_separations"] = seps;
  return j;
}

ordered_json axiom_violation_to_json(const AxiomEViolation& v) {
  ordered_json j;
  j["member"] = separation_to_json(v.member);
  j["crossing"] = separation_to_json(v.crossing);
  j["side"] = mask_to_ids(v.side);
  j["corner_first"] = separation_to_json(v.corner_first);
  j["corner_second"] = separation_to_json(v.corner_second);
  return j;
}

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace entangle
