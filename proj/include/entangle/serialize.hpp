#pragma once

#include <string>

#include "json.hpp"

#include "entangle/entanglement.hpp"
#include "entangle/graph.hpp"
#include "entangle/matroid.hpp"
#include "entangle/separation.hpp"
#include "entangle/tangle.hpp"
#include "entangle/treedec.hpp"

namespace entangle {

// Key order in emitted objects is fixed, so dumping the same value always
// produces the same bytes.
using ordered_json = nlohmann::ordered_json;

// Parsers reject unknown keys, wrong types and out-of-range ids with
// input_error; emitters write canonical forms only (sorted id lists,
// lexicographically ordered sides and members).

// {"n": int, "edges": [[u,v],...], "blue": [[u,v],...]}; "blue" may be
// omitted on input.
ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

// {"a": [ids...], "b": [ids...]}; n bounds the ids. Input sides may come in
// either order, output is canonical.
ordered_json separation_to_json(const Separation& s);
Separation separation_from_json(const ordered_json& j, int n);

// {"members": [separation,...]}; input is normalized through make_family.
ordered_json family_to_json(const SeparationFamily& fam);
SeparationFamily family_from_json(const ordered_json& j, int n);

// {"k": int, "orientation": [{"small": [...], "big": [...]}, ...]} in
// universe order.
ordered_json tangle_to_json(const Tangle& t);

// {"kind": "uniform", "n": int, "r": int} | {"kind": "graphic", "graph":
// <graph>} | {"kind": "binary", "columns": [[0/1,...],...]}.
Matroid matroid_from_json(const ordered_json& j);

// {"bags": [[ids...],...], "tree_edges": [[u,v],...], "edge_separations":
// [separation,...]}, mirroring the TreeDecomposition fields.
ordered_json treedec_to_json(const TreeDecomposition& t);

// Witness payload naming the member, its crossing partner, the violated side
// and the two same-side corners.
ordered_json axiom_violation_to_json(const AxiomEViolation& v);

// Text to JSON with parse failures mapped to input_error.
ordered_json parse_json_text(const std::string& text);

}  // namespace entangle
