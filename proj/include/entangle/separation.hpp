#pragma once

#include <vector>

#include "entangle/common.hpp"
#include "entangle/graph.hpp"

namespace entangle {

// Unordered pair {A, B} of vertex sets with A union B = V(G), A != B, and no
// edge between the strict sides. Canonical form: a is the lexicographically
// smaller side. The separator is A intersect B; the order is its size.
struct Separation {
  Vs a = 0;
  Vs b = 0;

  Vs separator() const { return a & b; }
  int order() const { return popcount(a & b); }
  bool operator==(const Separation&) const = default;
};

// Canonicalizes the side order. The two sides must differ.
Separation make_separation(Vs x, Vs y);

// Total order (order, a, b) used for every deterministic listing.
bool canonical_less(const Separation& s, const Separation& t);

struct SeparationHash {
  std::size_t operator()(const Separation& s) const {
    std::size_t h = std::hash<Vs>{}(s.a);
    return h ^ (std::hash<Vs>{}(s.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

// Both strict sides nonempty.
bool is_proper(const Separation& s);

// Structural validity of s as a separation of g (coverage, range, no edge
// between strict sides). Used to vet external input and corner outputs.
bool is_separation_of(const Graph& g, const Separation& s);

// Tightness: both strict sides contain a component of G - (A intersect B)
// whose neighborhood is the whole separator.
bool is_tight(const Graph& g, const Separation& s);

enum class PairClass { nested, crossing };

// Nested iff some renaming of sides gives A in C and B containing D.
// Symmetric; every separation is nested with itself.
PairClass classify_pair(const Separation& s, const Separation& t);

inline bool crosses(const Separation& s, const Separation& t) {
  return classify_pair(s, t) == PairClass::crossing;
}

// The four corners of a crossing pair: corner(X, Y) = {X n Y, X' u Y'} where
// X is a side of s and Y a side of t. at(i, j) is the corner for side i of s
// (0 = a, 1 = b) and side j of t. Opposite pairs are (0,0)/(1,1) and
// (0,1)/(1,0); corners with equal first index lie on the same side of s.
struct CornerQuad {
  Separation c[2][2];

  const Separation& at(int side_s, int side_t) const { return c[side_s][side_t]; }
};

// Corner extraction; calling it on a nested pair is a contract violation.
CornerQuad corners(const Separation& s, const Separation& t);

// All separations of g with order <= max_order (unbounded if max_order < 0),
// improper ones included, in canonical (order, a, b) order. Generation is
// separator first: every X in V with |X| within the bound contributes one
// separation per unordered bipartition of the components of G - X.
std::vector<Separation> enumerate_separations(const Graph& g, int max_order = -1,
                                              bool proper_only = false);

}  // namespace entangle
