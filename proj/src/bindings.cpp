#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entangle/corpus.hpp"
#include "entangle/entanglement.hpp"
#include "entangle/graph.hpp"
#include "entangle/matroid.hpp"
#include "entangle/separation.hpp"
#include "entangle/tangle.hpp"
#include "entangle/treedec.hpp"
#include "entangle/uncrossing.hpp"
#include "entangle/verify.hpp"

// Python module `entangle._core`. Vertex sets cross the boundary as sorted
// id lists, never as raw masks; separation families as lists of Separation.

namespace py = pybind11;

namespace {

using namespace entangle;

std::vector<int> ids(Vs mask) { return mask_to_ids(mask); }

// Side lists are validated against the full mask width, not a particular
// graph; the graph-aware checks live in the functions that take both.
Separation separation_from_ids(const std::vector<int>& a, const std::vector<int>& b) {
  return make_separation(ids_to_mask(a, 64), ids_to_mask(b, 64));
}

SeparationFamily family_from_list(std::vector<Separation> members) {
  return make_family(std::move(members));
}

std::string separation_repr(const Separation& s) {
  return "Separation(a=" + mask_to_string(s.a) + ", b=" + mask_to_string(s.b) + ")";
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> matroid_friendly_ids(
    const Matroid& m) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const AbstractSeparation& s : abstract_friendly(matroid_setting(m))) {
    out.emplace_back(ids(s.x), ids(s.y));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglements, friendly separations and canonical tree-decompositions";
  m.attr("__version__") = "0.1.0";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<cap_error>(m, "CapError", PyExc_RuntimeError);
  py::register_exception<contract_error>(m, "ContractError", PyExc_RuntimeError);
  py::register_exception<theorem_violation>(m, "TheoremViolation", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_readonly("n", &Graph::n)
      .def_readonly("edges", &Graph::edges)
      .def_readonly("blue", &Graph::blue)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n) +
               ", edges=" + std::to_string(g.edges.size()) + ")";
      });

  m.def("graph", &build_graph, py::arg("n"), py::arg("edges"),
        py::arg("blue") = std::vector<std::pair<int, int>>{},
        "Build a graph on vertices 0..n-1 with an optional blue edge subset");
  m.def("farey", &farey, py::arg("k"));
  m.def("wheel", &wheel, py::arg("r"));
  m.def("path", &path_graph, py::arg("n"));
  m.def("cycle", &cycle_graph, py::arg("n"));
  m.def("complete", &complete_graph, py::arg("n"));
  m.def("grid", &grid_graph, py::arg("rows"), py::arg("cols"));
  m.def("bowtie", &bowtie);
  m.def("glued_k4s", &glued_k4s);
  m.def("relabel", &relabel, py::arg("g"), py::arg("pi"),
        "Apply the vertex permutation pi (new id of v is pi[v])");
  m.def("is_connected", &is_connected, py::arg("g"));

  py::class_<Separation>(m, "Separation")
      .def(py::init(&separation_from_ids), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", [](const Separation& s) { return ids(s.a); })
      .def_property_readonly("b", [](const Separation& s) { return ids(s.b); })
      .def_property_readonly("separator", [](const Separation& s) { return ids(s.separator()); })
      .def_property_readonly("order", &Separation::order)
      .def_property_readonly("proper", [](const Separation& s) { return is_proper(s); })
      .def("__eq__", [](const Separation& s, const Separation& t) { return s == t; })
      .def("__hash__", [](const Separation& s) { return SeparationHash{}(s); })
      .def("__repr__", &separation_repr);

  m.def("separations", &enumerate_separations, py::arg("g"), py::arg("max_order") = -1,
        py::arg("proper_only") = false,
        "All separations of g with order at most max_order, in canonical order");
  m.def("crosses", &crosses, py::arg("s"), py::arg("t"));
  m.def(
      "corners",
      [](const Separation& s, const Separation& t) {
        CornerQuad q = corners(s, t);
        return std::make_pair(std::make_pair(q.at(0, 0), q.at(0, 1)),
                              std::make_pair(q.at(1, 0), q.at(1, 1)));
      },
      py::arg("s"), py::arg("t"),
      "Corner separations of a crossing pair, indexed (side of s, side of t)");

  py::class_<AxiomEViolation>(m, "AxiomViolation")
      .def_readonly("member", &AxiomEViolation::member)
      .def_readonly("crossing", &AxiomEViolation::crossing)
      .def_property_readonly("side", [](const AxiomEViolation& v) { return ids(v.side); })
      .def_readonly("corner_first", &AxiomEViolation::corner_first)
      .def_readonly("corner_second", &AxiomEViolation::corner_second)
      .def("__repr__", [](const AxiomEViolation& v) {
        return "AxiomViolation(member=" + separation_repr(v.member) +
               ", crossing=" + separation_repr(v.crossing) + ")";
      });

  m.def(
      "check_axiom_e",
      [](const Graph& g, std::vector<Separation> members) {
        return check_axiom_E(g, family_from_list(std::move(members)));
      },
      py::arg("g"), py::arg("members"),
      "First axiom (E) violation of the family, or None if it is an entanglement");
  m.def("max_entanglement",
        [](const Graph& g) { return max_entanglement(g).members; }, py::arg("g"),
        "Union of all entanglements of g");
  m.def(
      "entanglement_union_oracle",
      [](const Graph& g, int cap) { return entanglement_union_oracle(g, cap).members; },
      py::arg("g"), py::arg("cap") = -1);
  m.def(
      "crossing_number",
      [](const Separation& s, std::vector<Separation> members) {
        return crossing_number(s, family_from_list(std::move(members)));
      },
      py::arg("s"), py::arg("members"));
  m.def("friendly", [](const Graph& g) { return friendly(g).members; }, py::arg("g"),
        "Friendly separations of g; always pairwise nested");
  m.def(
      "friendly_oracle",
      [](const Graph& g, int cap) { return friendly_oracle(g, cap).members; }, py::arg("g"),
      py::arg("cap") = -1);
  m.def(
      "family_friendly",
      [](const Graph& g, const std::vector<std::vector<Separation>>& fams) {
        std::vector<SeparationFamily> families;
        families.reserve(fams.size());
        for (const auto& f : fams) families.push_back(family_from_list(f));
        return family_friendly(g, families).members;
      },
      py::arg("g"), py::arg("families"),
      "Friendly separations relative to an explicit list of entanglements");
  m.def(
      "verify_nested",
      [](std::vector<Separation> members) {
        return verify_nested(family_from_list(std::move(members)));
      },
      py::arg("members"), "First crossing pair, or None if pairwise nested");

  py::class_<Tangle>(m, "Tangle")
      .def_readonly("k", &Tangle::k)
      .def_property_readonly("universe",
                             [](const Tangle& t) { return t.universe; })
      .def_property_readonly("small_sides",
                             [](const Tangle& t) {
                               std::vector<std::vector<int>> out;
                               out.reserve(t.universe.size());
                               for (std::size_t i = 0; i < t.universe.size(); ++i) {
                                 out.push_back(ids(t.small_side(i)));
                               }
                               return out;
                             })
      .def("__repr__", [](const Tangle& t) {
        return "Tangle(k=" + std::to_string(t.k) +
               ", oriented=" + std::to_string(t.universe.size()) + ")";
      });

  m.def("tangles", &enumerate_tangles, py::arg("g"), py::arg("k"),
        "All tangles of g of order exactly k");
  m.def("distinguishable", &distinguishable, py::arg("t1"), py::arg("t2"));
  m.def("efficient_distinguishers", &efficient_distinguishers, py::arg("g"), py::arg("t1"),
        py::arg("t2"),
        "Minimum-order separations oriented oppositely by the two tangles");
  m.def(
      "filter_efficient_tangle_distinguishers",
      [](const Graph& g, std::vector<Separation> members, int k) {
        return filter_efficient_tangle_distinguishers(g, family_from_list(std::move(members)), k)
            .members;
      },
      py::arg("g"), py::arg("members"), py::arg("k"));

  py::class_<TreeDecomposition>(m, "TreeDecomposition")
      .def_property_readonly("bags",
                             [](const TreeDecomposition& t) {
                               std::vector<std::vector<int>> out;
                               out.reserve(t.bags.size());
                               for (Vs bag : t.bags) out.push_back(ids(bag));
                               return out;
                             })
      .def_readonly("tree_edges", &TreeDecomposition::tree_edges)
      .def_readonly("edge_separations", &TreeDecomposition::edge_separations)
      .def("__repr__", [](const TreeDecomposition& t) {
        return "TreeDecomposition(bags=" + std::to_string(t.bags.size()) + ")";
      });

  m.def(
      "tree_decomposition",
      [](const Graph& g, std::vector<Separation> members) {
        return build_tree_decomposition(g, family_from_list(std::move(members)));
      },
      py::arg("g"), py::arg("members"),
      "Tree-decomposition defined by a nested family of proper separations");
  m.def(
      "validate_tree_decomposition",
      [](const Graph& g, const TreeDecomposition& t) -> std::optional<std::string> {
        auto issue = validate_tree_decomposition(g, t);
        if (!issue) return std::nullopt;
        return issue->description;
      },
      py::arg("g"), py::arg("t"),
      "First violated tree-decomposition axiom as text, or None");
  m.def(
      "check_efficient_distinguishing",
      [](const Graph& g, std::vector<Separation> members, int k) {
        return check_efficient_distinguishing(g, family_from_list(std::move(members)), k);
      },
      py::arg("g"), py::arg("members"), py::arg("k"),
      "First pair of tangles of order <= k not efficiently distinguished, or None");
  m.def("tree_decomposition_dot", &tree_decomposition_dot, py::arg("t"));

  py::class_<Matroid>(m, "Matroid")
      .def_readonly("n", &Matroid::n)
      .def(
          "rank",
          [](const Matroid& m_, const std::vector<int>& subset) {
            return m_.rank(ids_to_mask(subset, m_.n));
          },
          py::arg("subset"))
      .def("__repr__", [](const Matroid& m_) {
        return "Matroid(n=" + std::to_string(m_.n) +
               ", rank=" + std::to_string(m_.full_rank()) + ")";
      });

  m.def("uniform_matroid", &uniform_matroid, py::arg("n"), py::arg("r"));
  m.def("graphic_matroid", &graphic_matroid, py::arg("g"),
        "Cycle matroid; elements are the edges of g in stored order");
  m.def("binary_matroid", &binary_matroid, py::arg("columns"),
        "Column matroid over GF(2); one 0/1 column per element");
  m.def("verify_matroid_rank_axioms",
        [](const Matroid& m_) -> std::optional<std::string> {
          return verify_matroid_rank_axioms(m_);
        },
        py::arg("m"));
  m.def("matroid_friendly", &matroid_friendly_ids, py::arg("m"),
        "Friendly bipartitions of the ground set as (side, side) id-list pairs");

  m.def("verification_suites", &verification_suites);
  m.def(
      "run_verification_suite_json",
      [](const std::string& suite, int max_n) {
        return suite_report_to_json(run_verification_suite(suite, max_n)).dump();
      },
      py::arg("suite"), py::arg("max_n") = 7,
      "Run one verification suite and return its report as a JSON string");
}
