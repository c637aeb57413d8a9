#include "entangle/entanglement.hpp"

#include <algorithm>
#include <unordered_map>

#include "entangle/tangle.hpp"

namespace entangle {

bool SeparationFamily::contains_sep(const Separation& s) const {
  return std::binary_search(members.begin(), members.end(), s,
                            [](const Separation& x, const Separation& y) {
                              return canonical_less(x, y);
                            });
}

SeparationFamily make_family(std::vector<Separation> members) {
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SeparationFamily{std::move(members)};
}

namespace {

void validate_family(const Graph& g, const SeparationFamily& fam, bool allow_empty) {
  if (!allow_empty && fam.members.empty()) {
    throw input_error("entanglements are nonempty; got an empty family");
  }
  for (const Separation& s : fam.members) {
    if (!is_separation_of(g, s)) {
      throw input_error("family member " + mask_to_string(s.a) + " / " + mask_to_string(s.b) +
                        " is not a separation of this graph");
    }
    if (!is_proper(s)) {
      throw input_error("family member " + mask_to_string(s.a) + " / " + mask_to_string(s.b) +
                        " is improper; families hold proper separations only");
    }
  }
}

// Precomputed axiom (E) geometry over the proper separations of one graph.
// A situation is one (member, crossing partner, side) triple whose two
// same-side corners both have order at most the member's order; its
// candidates are the corners of that side with order exactly equal, proper,
// resolved to their index in the proper list. A member with a situation
// without candidates can lie in no entanglement and is dead at build time.
struct ESituationTable {
  std::vector<Separation> proper;
  std::vector<std::uint8_t> dead;
  struct Situation {
    int owner;
    int cand[2];  // -1 when absent; distinct when both present
  };
  std::vector<Situation> situations;
  std::vector<std::vector<int>> referencing;  // proper index -> situation ids
};

ESituationTable build_table(const Graph& g) {
  ESituationTable tab;
  std::vector<Separation> all = enumerate_separations(g);
  for (const Separation& s : all) {
    if (is_proper(s)) tab.proper.push_back(s);
  }
  std::unordered_map<Separation, int, SeparationHash> index;
  for (std::size_t i = 0; i < tab.proper.size(); ++i) {
    index.emplace(tab.proper[i], static_cast<int>(i));
  }
  tab.dead.assign(tab.proper.size(), 0);
  tab.referencing.assign(tab.proper.size(), {});
  for (std::size_t si = 0; si < tab.proper.size(); ++si) {
    const Separation& s = tab.proper[si];
    int ord = s.order();
    for (const Separation& t : all) {
      if (!crosses(s, t)) continue;
      CornerQuad q = corners(s, t);
      for (int side = 0; side < 2 && !tab.dead[si]; ++side) {
        const Separation& c1 = q.at(side, 0);
        const Separation& c2 = q.at(side, 1);
        if (c1.order() > ord || c2.order() > ord) continue;
        ESituationTable::Situation sit{static_cast<int>(si), {-1, -1}};
        int found = 0;
        for (const Separation* c : {&c1, &c2}) {
          if (c->order() != ord || !is_proper(*c)) continue;
          auto it = index.find(*c);
          if (it == index.end()) {
            throw contract_error("proper corner missing from the separation universe");
          }
          if (found == 1 && sit.cand[0] == it->second) continue;  // same corner twice
          sit.cand[found++] = it->second;
        }
        if (found == 0) {
          tab.dead[si] = 1;  // no entanglement can contain s
        } else {
          int id = static_cast<int>(tab.situations.size());
          tab.situations.push_back(sit);
          for (int c = 0; c < found; ++c) tab.referencing[sit.cand[c]].push_back(id);
        }
      }
      if (tab.dead[si]) break;
    }
  }
  return tab;
}

// Downward iteration to the greatest fixed point inside the given start set:
// kill every member with a situation whose candidates are all dead, cascade.
std::vector<std::uint8_t> gfp_live(const ESituationTable& tab, std::vector<std::uint8_t> live) {
  std::vector<int> count(tab.situations.size(), 0);
  for (std::size_t sid = 0; sid < tab.situations.size(); ++sid) {
    for (int c : tab.situations[sid].cand) {
      if (c >= 0) ++count[sid];
    }
  }
  std::vector<int> queue;
  for (std::size_t i = 0; i < tab.proper.size(); ++i) {
    if (tab.dead[i] && live[i]) live[i] = 0;
    if (!live[i]) queue.push_back(static_cast<int>(i));
  }
  // Situations of live owners must keep at least one live candidate.
  std::size_t head = 0;
  while (head < queue.size()) {
    int dead_idx = queue[head++];
    for (int sid : tab.referencing[dead_idx]) {
      if (--count[sid] == 0) {
        int owner = tab.situations[sid].owner;
        if (live[owner]) {
          live[owner] = 0;
          queue.push_back(owner);
        }
      }
    }
  }
  return live;
}

SeparationFamily family_from_live(const ESituationTable& tab,
                                  const std::vector<std::uint8_t>& live) {
  std::vector<Separation> members;
  for (std::size_t i = 0; i < tab.proper.size(); ++i) {
    if (live[i]) members.push_back(tab.proper[i]);
  }
  return make_family(std::move(members));
}

}  // namespace

std::optional<AxiomEViolation> check_axiom_E(const Graph& g, const SeparationFamily& fam) {
  validate_family(g, fam, false);
  std::vector<Separation> all = enumerate_separations(g);
  for (const Separation& s : fam.members) {
    int ord = s.order();
    Vs sides[2] = {s.a, s.b};
    for (const Separation& t : all) {
      if (!crosses(s, t)) continue;
      CornerQuad q = corners(s, t);
      for (int side = 0; side < 2; ++side) {
        const Separation& c1 = q.at(side, 0);
        const Separation& c2 = q.at(side, 1);
        if (c1.order() > ord || c2.order() > ord) continue;
        bool ok = (c1.order() == ord && fam.contains_sep(c1)) ||
                  (c2.order() == ord && fam.contains_sep(c2));
        if (!ok) {
          return AxiomEViolation{s, t, sides[side], c1, c2};
        }
      }
    }
  }
  return std::nullopt;
}

SeparationFamily max_entanglement(const Graph& g) {
  ESituationTable tab = build_table(g);
  std::vector<std::uint8_t> live(tab.proper.size(), 1);
  return family_from_live(tab, gfp_live(tab, std::move(live)));
}

int crossing_number(const Separation& s, const SeparationFamily& u) {
  int x = 0;
  for (const Separation& t : u.members) {
    if (crosses(s, t)) ++x;
  }
  return x;
}

SeparationFamily friendly(const Graph& g) {
  ESituationTable tab = build_table(g);
  std::vector<std::uint8_t> in_union =
      gfp_live(tab, std::vector<std::uint8_t>(tab.proper.size(), 1));
  // Crossing numbers against the union of all entanglements.
  std::vector<int> member_ids;
  for (std::size_t i = 0; i < tab.proper.size(); ++i) {
    if (in_union[i]) member_ids.push_back(static_cast<int>(i));
  }
  std::vector<int> x(tab.proper.size(), 0);
  for (std::size_t a = 0; a < member_ids.size(); ++a) {
    for (std::size_t b = a + 1; b < member_ids.size(); ++b) {
      if (crosses(tab.proper[member_ids[a]], tab.proper[member_ids[b]])) {
        ++x[member_ids[a]];
        ++x[member_ids[b]];
      }
    }
  }
  std::vector<int> thresholds;
  for (int i : member_ids) thresholds.push_back(x[i]);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::vector<Separation> result;
  for (int c : thresholds) {
    std::vector<std::uint8_t> live(tab.proper.size(), 0);
    for (int i : member_ids) {
      if (x[i] >= c) live[i] = 1;
    }
    live = gfp_live(tab, std::move(live));
    for (int i : member_ids) {
      if (live[i] && x[i] == c) result.push_back(tab.proper[i]);
    }
  }
  SeparationFamily out = make_family(std::move(result));
  if (auto witness = verify_nested(out)) {
    throw theorem_violation("friendly separations cross: " + mask_to_string(witness->first.a) +
                            " / " + mask_to_string(witness->first.b) + " and " +
                            mask_to_string(witness->second.a) + " / " +
                            mask_to_string(witness->second.b));
  }
  return out;
}

namespace {

// Shared scaffolding for the 2^m subset oracles: the proper separations, per
// member the candidate bitmasks of its situations, and members that can lie
// in no entanglement at all.
struct OracleScan {
  std::vector<Separation> proper;
  std::vector<std::vector<std::uint32_t>> situation_masks;
  std::vector<std::uint8_t> impossible;
  std::vector<std::uint32_t> passing;  // all subsets that satisfy axiom (E)
  std::uint32_t union_mask = 0;
};

OracleScan oracle_scan(const Graph& g, int cap) {
  if (cap < 0) cap = caps().oracle_max_proper;
  if (g.n > caps().max_vertices) {
    throw cap_error("oracle needs at most " + std::to_string(caps().max_vertices) +
                    " vertices, got " + std::to_string(g.n));
  }
  ESituationTable tab = build_table(g);
  int m = static_cast<int>(tab.proper.size());
  if (m > cap) {
    throw cap_error("oracle needs at most " + std::to_string(cap) +
                    " proper separations, got " + std::to_string(m));
  }
  OracleScan scan;
  scan.proper = tab.proper;
  scan.situation_masks.assign(m, {});
  scan.impossible.assign(tab.dead.begin(), tab.dead.end());
  for (const auto& sit : tab.situations) {
    std::uint32_t mask = 0;
    for (int c : sit.cand) {
      if (c >= 0) mask |= std::uint32_t{1} << c;
    }
    scan.situation_masks[sit.owner].push_back(mask);
  }
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
    bool ok = true;
    for (std::uint32_t rest = subset; rest && ok; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      if (scan.impossible[i]) {
        ok = false;
        break;
      }
      for (std::uint32_t mask : scan.situation_masks[i]) {
        if ((mask & subset) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      scan.passing.push_back(subset);
      scan.union_mask |= subset;
    }
  }
  return scan;
}

SeparationFamily family_from_mask(const std::vector<Separation>& proper, std::uint32_t mask) {
  std::vector<Separation> members;
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    members.push_back(proper[std::countr_zero(rest)]);
  }
  return make_family(std::move(members));
}

}  // namespace

SeparationFamily entanglement_union_oracle(const Graph& g, int cap) {
  OracleScan scan = oracle_scan(g, cap);
  return family_from_mask(scan.proper, scan.union_mask);
}

SeparationFamily friendly_oracle(const Graph& g, int cap) {
  OracleScan scan = oracle_scan(g, cap);
  int m = static_cast<int>(scan.proper.size());
  // Crossing numbers against the oracle union.
  std::vector<int> x(m, 0);
  SeparationFamily u = family_from_mask(scan.proper, scan.union_mask);
  for (int i = 0; i < m; ++i) {
    x[i] = crossing_number(scan.proper[i], u);
  }
  std::uint32_t friendly_mask = 0;
  for (std::uint32_t subset : scan.passing) {
    int best = -1;
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      if (best < 0 || x[i] < best) best = x[i];
    }
    for (std::uint32_t rest = subset; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      if (x[i] == best) friendly_mask |= std::uint32_t{1} << i;
    }
  }
  return family_from_mask(scan.proper, friendly_mask);
}

SeparationFamily family_friendly(const Graph& g, const std::vector<SeparationFamily>& fams) {
  std::vector<Separation> union_members;
  for (const SeparationFamily& fam : fams) {
    if (auto violation = check_axiom_E(g, fam)) {
      throw input_error("family is not an entanglement: member " +
                        mask_to_string(violation->member.a) + " / " +
                        mask_to_string(violation->member.b) + " fails against " +
                        mask_to_string(violation->crossing.a) + " / " +
                        mask_to_string(violation->crossing.b));
    }
    for (const Separation& s : fam.members) union_members.push_back(s);
  }
  SeparationFamily u = make_family(std::move(union_members));
  std::vector<Separation> result;
  for (const SeparationFamily& fam : fams) {
    int best = -1;
    for (const Separation& s : fam.members) {
      int xs = crossing_number(s, u);
      if (best < 0 || xs < best) best = xs;
    }
    for (const Separation& s : fam.members) {
      if (crossing_number(s, u) == best) result.push_back(s);
    }
  }
  return make_family(std::move(result));
}

SeparationFamily filter_efficient_tangle_distinguishers(const Graph& g,
                                                        const SeparationFamily& n, int k) {
  validate_family(g, n, true);
  std::vector<Tangle> tangles;
  for (int order = 1; order <= k; ++order) {
    for (Tangle& t : enumerate_tangles(g, order)) tangles.push_back(std::move(t));
  }
  std::vector<Separation> distinguishers;
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    for (std::size_t j = i + 1; j < tangles.size(); ++j) {
      if (!distinguishable(tangles[i], tangles[j])) continue;
      for (Separation& s : efficient_distinguishers(g, tangles[i], tangles[j])) {
        distinguishers.push_back(std::move(s));
      }
    }
  }
  SeparationFamily d = make_family(std::move(distinguishers));
  std::vector<Separation> kept;
  for (const Separation& s : n.members) {
    if (d.contains_sep(s)) kept.push_back(s);
  }
  return make_family(std::move(kept));
}

std::optional<std::pair<Separation, Separation>> verify_nested(const SeparationFamily& fam) {
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
      if (crosses(fam.members[i], fam.members[j])) {
        return std::make_pair(fam.members[i], fam.members[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace entangle
