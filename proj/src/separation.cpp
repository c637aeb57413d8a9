#include "entangle/separation.hpp"

#include <algorithm>

namespace entangle {

Separation make_separation(Vs x, Vs y) {
  if (x == y) {
    throw contract_error("a separation needs two distinct sides, got " + mask_to_string(x) +
                         " twice");
  }
  if (lex_less(y, x)) std::swap(x, y);
  return Separation{x, y};
}

bool canonical_less(const Separation& s, const Separation& t) {
  if (s.order() != t.order()) return s.order() < t.order();
  if (s.a != t.a) return lex_less(s.a, t.a);
  if (s.b != t.b) return lex_less(s.b, t.b);
  return false;
}

bool is_proper(const Separation& s) {
  return (s.a & ~s.b) != 0 && (s.b & ~s.a) != 0;
}

bool is_separation_of(const Graph& g, const Separation& s) {
  Vs v = g.vertices();
  if ((s.a | s.b) != v) return false;
  if ((s.a & ~v) || (s.b & ~v)) return false;
  if (s.a == s.b) return false;
  return !g.any_edge_between(s.a & ~s.b, s.b & ~s.a);
}

bool is_tight(const Graph& g, const Separation& s) {
  Vs sep = s.separator();
  bool side_a = false;
  bool side_b = false;
  for (Vs comp : components_after_deletion(g, sep)) {
    if (g.neighborhood(comp) != sep) continue;
    if ((comp & ~s.b) == comp) side_a = true;  // comp inside A minus B
    if ((comp & ~s.a) == comp) side_b = true;
  }
  return side_a && side_b;
}

PairClass classify_pair(const Separation& s, const Separation& t) {
  auto fits = [](Vs x, Vs xo, Vs y, Vs yo) {
    // x in y and the other side of x contains the other side of y.
    return (x & ~y) == 0 && (yo & ~xo) == 0;
  };
  if (fits(s.a, s.b, t.a, t.b) || fits(s.a, s.b, t.b, t.a) || fits(s.b, s.a, t.a, t.b) ||
      fits(s.b, s.a, t.b, t.a)) {
    return PairClass::nested;
  }
  return PairClass::crossing;
}

CornerQuad corners(const Separation& s, const Separation& t) {
  if (classify_pair(s, t) == PairClass::nested) {
    throw contract_error("corner extraction needs a crossing pair");
  }
  Vs side_s[2] = {s.a, s.b};
  Vs side_t[2] = {t.a, t.b};
  CornerQuad q;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      q.c[i][j] = make_separation(side_s[i] & side_t[j], side_s[1 - i] | side_t[1 - j]);
    }
  }
  return q;
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order, bool proper_only) {
  std::vector<Separation> out;
  long long limit = caps().max_separations;
  Vs v = g.vertices();
  int bound = max_order < 0 ? g.n : std::min(max_order, g.n);
  // Subsets of V in mask order; the final sort establishes the canonical order.
  for (Vs x = 0;; ++x) {
    if (popcount(x) <= bound) {
      auto comps = components_after_deletion(g, x);
      int c = static_cast<int>(comps.size());
      if (c > 0) {
        // Component 0 stays on the first side; subsets of the rest pick the
        // companions, so each unordered bipartition appears exactly once.
        for (Vs pick = 0; pick < (Vs{1} << (c - 1)); ++pick) {
          Vs g1 = comps[0];
          Vs g2 = 0;
          for (int i = 1; i < c; ++i) {
            if (contains(pick, i - 1)) {
              g1 |= comps[i];
            } else {
              g2 |= comps[i];
            }
          }
          if (proper_only && g2 == 0) continue;
          out.push_back(make_separation(x | g1, x | g2));
          if (static_cast<long long>(out.size()) > limit) {
            throw cap_error("separation enumeration exceeded the cap of " +
                            std::to_string(limit) + " entries");
          }
        }
      }
    }
    if (x == v) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace entangle
