#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entangle/common.hpp"
#include "entangle/graph.hpp"
#include "entangle/matroid.hpp"

namespace entangle {

// Element of an abstract separation universe: an unordered pair {x, y} of
// distinct id sets. Canonical form: x is the lexicographically smaller side.
// No coverage or edge condition is imposed; the setting's relations carry
// all structure.
struct AbstractSeparation {
  Vs x = 0;
  Vs y = 0;

  Vs side(int i) const { return i == 0 ? x : y; }
  bool operator==(const AbstractSeparation&) const = default;
};

// Canonicalizes the side order. The two sides must differ.
AbstractSeparation make_abstract_separation(Vs x, Vs y);

// Total order (x, y) lexicographic, used for deterministic listings.
bool abstract_less(const AbstractSeparation& r, const AbstractSeparation& s);

struct AbstractSeparationHash {
  std::size_t operator()(const AbstractSeparation& s) const {
    std::size_t h = std::hash<Vs>{}(s.x);
    return h ^ (std::hash<Vs>{}(s.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

// Submodular uncrossing-setting: a finite universe S with a crossing
// relation, a corner map and an order function. The callbacks must be pure
// and deterministic. crosses is only consulted on pairs from S; corner and
// order must also accept the corners of crossing pairs, which need not lie
// in S themselves. corner(r, i, s, j) is the corner for side i of r (0 = x,
// 1 = y) and side j of s; corners with equal first argument lie on the same
// side of r, flipping both side choices yields the opposite corner.
struct UncrossingSetting {
  std::vector<AbstractSeparation> elements;  // abstract_less sorted, duplicate free
  std::function<bool(const AbstractSeparation&, const AbstractSeparation&)> crosses;
  std::function<AbstractSeparation(const AbstractSeparation& r, int side_r,
                                   const AbstractSeparation& s, int side_s)>
      corner;
  std::function<long long(const AbstractSeparation&)> order;
};

// S = proper separations of g with order <= max_order (unbounded if
// negative); crossing, corners and order are the graph notions.
UncrossingSetting graph_setting(const Graph& g, int max_order = -1);

// S = bipartitions {A, E \ A} of the ground set with both parts nonempty.
// Nested means one side of one pair contains a side of the other, crossing
// is its negation; corner(X, Y) = {X n Y, E \ (X n Y)}; the order of {A, B}
// is rank(A) + rank(B) - rank(E).
UncrossingSetting matroid_setting(const Matroid& m);

struct SettingAxiomFailure {
  std::string description;
};

// Exhaustive audit of the setting axioms: canonical element list,
// anti-reflexive symmetric crossing, four pairwise distinct corners per
// crossing pair, submodularity for both opposite corner pairs, and (F1)-(F3)
// for opposite corner pairs lying inside S. Returns the first failure in
// element order.
std::optional<SettingAxiomFailure> verify_setting_axioms(const UncrossingSetting& setting);

// Union of all abstract entanglements, computed as the greatest fixed point
// of the abstract (E)-operator: a member r crossed by some s in S so that
// the two corners on one side of r both have order <= order(r) needs one of
// them with order equal to order(r) inside the entanglement. Refuses
// settings that fail verify_setting_axioms.
std::vector<AbstractSeparation> abstract_max_entanglement(const UncrossingSetting& setting);

// Abstract friendly separations: members of the union that minimize the
// crossing-number x within some entanglement. Refuses settings that fail
// verify_setting_axioms; crossing output aborts with a theorem_violation.
std::vector<AbstractSeparation> abstract_friendly(const UncrossingSetting& setting);

// First crossing pair among the given members under the setting's relation.
std::optional<std::pair<AbstractSeparation, AbstractSeparation>> verify_abstract_nested(
    const UncrossingSetting& setting, const std::vector<AbstractSeparation>& members);

}  // namespace entangle
