#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "entangle/common.hpp"
#include "entangle/graph.hpp"
#include "entangle/separation.hpp"

namespace entangle {

// Finite set of proper separations of a fixed graph, canonically sorted and
// deduplicated. Families are the currency of axiom (E): entanglements, the
// union of all entanglements, friendly separations.
struct SeparationFamily {
  std::vector<Separation> members;

  bool contains_sep(const Separation& s) const;
  bool operator==(const SeparationFamily&) const = default;
};

SeparationFamily make_family(std::vector<Separation> members);

// Witness that a family fails axiom (E): the member s, a separation t of G
// crossing it, and the side of s on which both corners have order at most
// order(s) while no corner of that side with order exactly order(s) lies in
// the family. The recorded data re-verifies as a genuine violation.
struct AxiomEViolation {
  Separation member;
  Separation crossing;
  Vs side = 0;
  Separation corner_first;
  Separation corner_second;
};

// Axiom (E) over the whole separation universe of g: the crossing partner t
// ranges over every separation of G, improper ones included. Returns the
// first violation in canonical (member, partner, side) order, or nothing.
// An empty family is an input error (entanglements are nonempty); so is a
// member that is not a proper separation of g.
std::optional<AxiomEViolation> check_axiom_E(const Graph& g, const SeparationFamily& fam);

// The union of all entanglements in g: the greatest fixed point of the
// monotone operator F(X) = {proper s : every (E)-situation for s has a
// qualifying corner in X}, reached by downward iteration from all proper
// separations. Empty when g has no entanglement.
SeparationFamily max_entanglement(const Graph& g);

// Independent brute-force oracle: the union over all nonempty subsets of
// proper separations that pass check_axiom_E. Exhaustive over 2^m subsets;
// refuses graphs with more than cap proper separations (default from caps()).
SeparationFamily entanglement_union_oracle(const Graph& g, int cap = -1);

// |{t in u : t crosses s}|. With u = max_entanglement(g) this is the
// crossing number x(s).
int crossing_number(const Separation& s, const SeparationFamily& u);

// All separations lying in some entanglement whose crossing number is
// minimal within that entanglement. Computed per crossing-number threshold c
// as the greatest fixed point restricted to {t in U : x(t) >= c}. The result
// must be pairwise nested; a crossing pair in the output raises
// theorem_violation with the witness.
SeparationFamily friendly(const Graph& g);

// Brute-force reading of the same definition: union over every entanglement
// (enumerated as in entanglement_union_oracle) of its crossing-number
// minimizers, with x taken against the oracle union.
SeparationFamily friendly_oracle(const Graph& g, int cap = -1);

// Friendly separations relative to an explicit list of entanglements: every
// family must pass check_axiom_E (violations are input errors), and x counts
// crossings against the union of the given families only.
SeparationFamily family_friendly(const Graph& g, const std::vector<SeparationFamily>& fams);

// The subset of n whose members efficiently distinguish some pair of tangles
// of order at most k.
SeparationFamily filter_efficient_tangle_distinguishers(const Graph& g,
                                                        const SeparationFamily& n, int k);

// First crossing pair in canonical order, or nothing if pairwise nested.
std::optional<std::pair<Separation, Separation>> verify_nested(const SeparationFamily& fam);

}  // namespace entangle
