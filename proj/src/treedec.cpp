#include "entangle/treedec.hpp"

#include <algorithm>
#include <sstream>

namespace entangle {

namespace {

// Oriented member: index o = 2*i + dir, where dir 0 points member i toward
// its side b and dir 1 toward its side a.
struct OrientationSearch {
  const std::vector<Separation>& members;
  int m;
  std::vector<std::uint8_t> le;  // le[o*2m+p]: oriented o <= oriented p
  std::vector<int> dir;          // -1 unassigned, else 0/1
  std::vector<std::vector<std::uint8_t>> solutions;

  explicit OrientationSearch(const std::vector<Separation>& mem)
      : members(mem), m(static_cast<int>(mem.size())) {
    le.assign(static_cast<std::size_t>(2 * m) * (2 * m), 0);
    dir.assign(m, -1);
    for (int o = 0; o < 2 * m; ++o) {
      for (int p = 0; p < 2 * m; ++p) {
        if (o / 2 == p / 2) continue;
        le[static_cast<std::size_t>(o) * 2 * m + p] =
            (far(o) & ~far(p)) == 0 && (big(p) & ~big(o)) == 0;
      }
    }
  }

  Vs far(int o) const { return (o & 1) ? members[o / 2].b : members[o / 2].a; }
  Vs big(int o) const { return (o & 1) ? members[o / 2].a : members[o / 2].b; }

  // Assigns member i direction d and propagates down-closure: every oriented
  // member below a chosen one is forced. Records assignments in trail;
  // returns false on a contradiction.
  bool assign(int i, int d, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> pending = {{i, d}};
    while (!pending.empty()) {
      auto [j, e] = pending.back();
      pending.pop_back();
      if (dir[j] == e) continue;
      if (dir[j] == 1 - e) return false;
      dir[j] = e;
      trail.push_back(j);
      int o = 2 * j + e;
      for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        for (int f = 0; f < 2; ++f) {
          if (le[static_cast<std::size_t>(2 * k + f) * 2 * m + o]) pending.push_back({k, f});
        }
      }
    }
    return true;
  }

  void solve() {
    int i = 0;
    while (i < m && dir[i] >= 0) ++i;
    if (i == m) {
      solutions.emplace_back(dir.begin(), dir.end());
      return;
    }
    for (int d = 0; d < 2; ++d) {
      std::vector<int> trail;
      if (assign(i, d, trail)) solve();
      for (int j : trail) dir[j] = -1;
    }
  }
};

}  // namespace

TreeDecomposition build_tree_decomposition(const Graph& g, const SeparationFamily& n) {
  for (const Separation& s : n.members) {
    if (!is_separation_of(g, s)) {
      throw input_error("family member " + mask_to_string(s.a) + " / " + mask_to_string(s.b) +
                        " is not a separation of this graph");
    }
    if (!is_proper(s)) {
      throw input_error("family member " + mask_to_string(s.a) + " / " + mask_to_string(s.b) +
                        " is improper; tree-decompositions need proper separations");
    }
  }
  if (auto witness = verify_nested(n)) {
    throw contract_error("family members cross: " + mask_to_string(witness->first.a) + " / " +
                         mask_to_string(witness->first.b) + " and " +
                         mask_to_string(witness->second.a) + " / " +
                         mask_to_string(witness->second.b));
  }
  SeparationFamily fam = make_family(n.members);
  int m = static_cast<int>(fam.members.size());

  OrientationSearch search(fam.members);
  search.solve();
  std::sort(search.solutions.begin(), search.solutions.end());

  TreeDecomposition t;
  for (const auto& sol : search.solutions) {
    Vs bag = g.vertices();
    for (int i = 0; i < m; ++i) {
      bag &= sol[i] ? fam.members[i].a : fam.members[i].b;
    }
    t.bags.push_back(bag);
  }
  std::vector<int> uses(m, 0);
  int count = static_cast<int>(search.solutions.size());
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      int flipped = -1;
      for (int i = 0; i < m; ++i) {
        if (search.solutions[u][i] != search.solutions[v][i]) {
          if (flipped >= 0) {
            flipped = -2;
            break;
          }
          flipped = i;
        }
      }
      if (flipped >= 0) {
        t.tree_edges.push_back({u, v});
        t.edge_separations.push_back(fam.members[flipped]);
        ++uses[flipped];
      }
    }
  }
  if (count != m + 1) {
    throw contract_error("nested family induced " + std::to_string(count) +
                         " orientations for " + std::to_string(m) + " members");
  }
  for (int i = 0; i < m; ++i) {
    if (uses[i] != 1) {
      throw contract_error("family member is induced by " + std::to_string(uses[i]) +
                           " tree edges");
    }
  }
  return t;
}

std::optional<TreeDecompositionIssue> validate_tree_decomposition(const Graph& g,
                                                                  const TreeDecomposition& t) {
  int count = static_cast<int>(t.bags.size());
  if (count == 0) {
    return TreeDecompositionIssue{"tree has no nodes"};
  }
  for (auto [u, v] : t.tree_edges) {
    if (u < 0 || v < 0 || u >= count || v >= count || u == v) {
      return TreeDecompositionIssue{"tree edge with invalid endpoints"};
    }
  }
  if (static_cast<int>(t.tree_edges.size()) != count - 1) {
    return TreeDecompositionIssue{"tree must have exactly one edge less than nodes"};
  }
  std::vector<std::vector<int>> adj(count);
  for (auto [u, v] : t.tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::uint8_t> seen(count, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    return TreeDecompositionIssue{"tree is not connected"};
  }

  Vs covered = 0;
  for (Vs bag : t.bags) covered |= bag;
  if (covered != g.vertices()) {
    return TreeDecompositionIssue{"bags do not cover all vertices: missing " +
                                  mask_to_string(g.vertices() & ~covered)};
  }
  for (auto [u, v] : g.edges) {
    bool inside = false;
    for (Vs bag : t.bags) {
      if (contains(bag, u) && contains(bag, v)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      return TreeDecompositionIssue{"edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                    "} lies in no bag"};
    }
  }
  for (int v = 0; v < g.n; ++v) {
    // The nodes whose bags contain v must induce a connected subtree.
    int root = -1;
    for (int u = 0; u < count; ++u) {
      if (contains(t.bags[u], v)) {
        root = u;
        break;
      }
    }
    if (root < 0) continue;  // unreachable after the coverage check
    std::vector<std::uint8_t> reached(count, 0);
    std::vector<int> frontier = {root};
    reached[root] = 1;
    while (!frontier.empty()) {
      int u = frontier.back();
      frontier.pop_back();
      for (int w : adj[u]) {
        if (!reached[w] && contains(t.bags[w], v)) {
          reached[w] = 1;
          frontier.push_back(w);
        }
      }
    }
    for (int u = 0; u < count; ++u) {
      if (contains(t.bags[u], v) && !reached[u]) {
        return TreeDecompositionIssue{"vertex " + std::to_string(v) +
                                      " does not induce a connected subtree"};
      }
    }
  }
  if (t.edge_separations.size() != t.tree_edges.size()) {
    return TreeDecompositionIssue{"edge separation count does not match tree edge count"};
  }
  for (std::size_t e = 0; e < t.tree_edges.size(); ++e) {
    auto [eu, ev] = t.tree_edges[e];
    // Union of bags on each half of the tree after removing this edge.
    std::vector<std::uint8_t> side(count, 0);
    std::vector<int> frontier = {eu};
    side[eu] = 1;
    while (!frontier.empty()) {
      int u = frontier.back();
      frontier.pop_back();
      for (std::size_t f = 0; f < t.tree_edges.size(); ++f) {
        if (f == e) continue;
        auto [fu, fv] = t.tree_edges[f];
        int other = -1;
        if (fu == u) other = fv;
        if (fv == u) other = fu;
        if (other >= 0 && !side[other]) {
          side[other] = 1;
          frontier.push_back(other);
        }
      }
    }
    Vs left = 0;
    Vs right = 0;
    for (int u = 0; u < count; ++u) {
      (side[u] ? left : right) |= t.bags[u];
    }
    if (left == right || !(make_separation(left, right) == t.edge_separations[e])) {
      return TreeDecompositionIssue{"edge separation does not match the bags on its sides"};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Tangle, Tangle>> check_efficient_distinguishing(
    const Graph& g, const SeparationFamily& n, int k) {
  for (const Separation& s : n.members) {
    if (!is_separation_of(g, s) || !is_proper(s)) {
      throw input_error("family member " + mask_to_string(s.a) + " / " + mask_to_string(s.b) +
                        " is not a proper separation of this graph");
    }
  }
  std::vector<Tangle> tangles;
  for (int order = 1; order <= k; ++order) {
    for (Tangle& t : enumerate_tangles(g, order)) tangles.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    for (std::size_t j = i + 1; j < tangles.size(); ++j) {
      if (!distinguishable(tangles[i], tangles[j])) continue;
      bool hit = false;
      for (const Separation& s : efficient_distinguishers(g, tangles[i], tangles[j])) {
        if (n.contains_sep(s)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        return std::make_pair(tangles[i], tangles[j]);
      }
    }
  }
  return std::nullopt;
}

std::string tree_decomposition_dot(const TreeDecomposition& t) {
  std::ostringstream out;
  out << "graph treedec {\n";
  out << "  node [shape=box];\n";
  for (std::size_t u = 0; u < t.bags.size(); ++u) {
    out << "  n" << u << " [label=\"" << mask_to_string(t.bags[u]) << "\"];\n";
  }
  for (std::size_t e = 0; e < t.tree_edges.size(); ++e) {
    auto [u, v] = t.tree_edges[e];
    out << "  n" << u << " -- n" << v << " [label=\"" << mask_to_string(t.bags[u] & t.bags[v])
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace entangle
