#include "entangle/uncrossing.hpp"

#include <algorithm>
#include <unordered_map>

#include "entangle/separation.hpp"

namespace entangle {

AbstractSeparation make_abstract_separation(Vs x, Vs y) {
  if (x == y) throw contract_error("abstract separation sides must differ");
  if (lex_less(y, x)) std::swap(x, y);
  return AbstractSeparation{x, y};
}

bool abstract_less(const AbstractSeparation& r, const AbstractSeparation& s) {
  if (r.x != s.x) return lex_less(r.x, s.x);
  return lex_less(r.y, s.y);
}

namespace {

std::string abstract_to_string(const AbstractSeparation& s) {
  return mask_to_string(s.x) + " / " + mask_to_string(s.y);
}

Separation to_sep(const AbstractSeparation& s) {
  // Both canonical forms put the lexicographically smaller side first.
  return Separation{s.x, s.y};
}

std::vector<AbstractSeparation> sorted_elements(std::vector<AbstractSeparation> elements) {
  std::sort(elements.begin(), elements.end(), abstract_less);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

}  // namespace

UncrossingSetting graph_setting(const Graph& g, int max_order) {
  UncrossingSetting setting;
  std::vector<AbstractSeparation> elements;
  for (const Separation& s : enumerate_separations(g, max_order, /*proper_only=*/true)) {
    elements.push_back(AbstractSeparation{s.a, s.b});
  }
  setting.elements = sorted_elements(std::move(elements));
  setting.crosses = [](const AbstractSeparation& r, const AbstractSeparation& s) {
    return crosses(to_sep(r), to_sep(s));
  };
  setting.corner = [](const AbstractSeparation& r, int side_r, const AbstractSeparation& s,
                      int side_s) {
    const Separation c = corners(to_sep(r), to_sep(s)).at(side_r, side_s);
    return AbstractSeparation{c.a, c.b};
  };
  setting.order = [](const AbstractSeparation& s) {
    return static_cast<long long>(popcount(s.x & s.y));
  };
  return setting;
}

UncrossingSetting matroid_setting(const Matroid& m) {
  if (m.n > caps().max_vertices) {
    throw cap_error("matroid ground set size " + std::to_string(m.n) + " exceeds cap " +
                    std::to_string(caps().max_vertices));
  }
  if (m.rank_table.size() != (std::size_t{1} << m.n)) {
    throw input_error("matroid rank table size does not match its ground set");
  }
  const Vs ground = full_mask(m.n);
  UncrossingSetting setting;
  // One element per unordered bipartition: the side containing id 0 walks
  // the odd masks, skipping the full set so both parts stay nonempty.
  for (Vs a = 1; a < ground; a += 2) {
    setting.elements.push_back(make_abstract_separation(a, ground ^ a));
  }
  setting.elements = sorted_elements(std::move(setting.elements));
  auto nested = [](const AbstractSeparation& r, const AbstractSeparation& s) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if ((r.side(i) & ~s.side(j)) == 0 || (s.side(j) & ~r.side(i)) == 0) return true;
      }
    }
    return false;
  };
  setting.crosses = [nested](const AbstractSeparation& r, const AbstractSeparation& s) {
    return !nested(r, s);
  };
  setting.corner = [ground](const AbstractSeparation& r, int side_r, const AbstractSeparation& s,
                            int side_s) {
    Vs c = r.side(side_r) & s.side(side_s);
    return make_abstract_separation(c, ground ^ c);
  };
  setting.order = [m](const AbstractSeparation& s) {
    return static_cast<long long>(m.rank(s.x) + m.rank(s.y) - m.full_rank());
  };
  return setting;
}

namespace {

using Failure = std::optional<SettingAxiomFailure>;

Failure check_crossing_relation(const UncrossingSetting& setting) {
  const auto& el = setting.elements;
  for (std::size_t i = 0; i + 1 < el.size(); ++i) {
    if (!abstract_less(el[i], el[i + 1])) {
      return SettingAxiomFailure{"elements are not sorted canonically at position " +
                                 std::to_string(i)};
    }
  }
  for (const AbstractSeparation& r : el) {
    if (setting.crosses(r, r)) {
      return SettingAxiomFailure{"crossing relation is not anti-reflexive at " +
                                 abstract_to_string(r)};
    }
  }
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (setting.crosses(el[i], el[j]) != setting.crosses(el[j], el[i])) {
        return SettingAxiomFailure{"crossing relation is not symmetric on " +
                                   abstract_to_string(el[i]) + " and " +
                                   abstract_to_string(el[j])};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SettingAxiomFailure> verify_setting_axioms(const UncrossingSetting& setting) {
  if (auto fail = check_crossing_relation(setting)) return fail;
  const auto& el = setting.elements;
  std::unordered_map<AbstractSeparation, int, AbstractSeparationHash> index;
  for (std::size_t i = 0; i < el.size(); ++i) {
    index.emplace(el[i], static_cast<int>(i));
  }
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const AbstractSeparation& r = el[i];
      const AbstractSeparation& s = el[j];
      if (!setting.crosses(r, s)) continue;
      const std::string pair_text = abstract_to_string(r) + " and " + abstract_to_string(s);
      AbstractSeparation c[2][2];
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) c[a][b] = setting.corner(r, a, s, b);
      }
      for (int first = 0; first < 4; ++first) {
        for (int second = first + 1; second < 4; ++second) {
          if (c[first / 2][first % 2] == c[second / 2][second % 2]) {
            return SettingAxiomFailure{"corners of " + pair_text + " are not pairwise distinct"};
          }
        }
      }
      const long long budget = setting.order(r) + setting.order(s);
      // The two opposite pairs are the diagonals of the corner square.
      for (int a = 0; a < 2; ++a) {
        const AbstractSeparation& c1 = c[0][a];
        const AbstractSeparation& c2 = c[1][1 - a];
        if (setting.order(c1) + setting.order(c2) > budget) {
          return SettingAxiomFailure{"submodularity fails for the opposite corners " +
                                     abstract_to_string(c1) + " and " + abstract_to_string(c2) +
                                     " of " + pair_text};
        }
        if (!index.count(c1) || !index.count(c2)) continue;  // (F) binds S-corners only
        for (const AbstractSeparation* parent : {&r, &s}) {
          if (setting.crosses(*parent, c1) || setting.crosses(*parent, c2)) {
            return SettingAxiomFailure{"condition (F3) fails: " + abstract_to_string(*parent) +
                                       " crosses a corner of " + pair_text};
          }
        }
        for (const AbstractSeparation& t : el) {
          bool hits_c1 = setting.crosses(t, c1);
          bool hits_c2 = setting.crosses(t, c2);
          bool hits_r = setting.crosses(t, r);
          bool hits_s = setting.crosses(t, s);
          if ((hits_c1 || hits_c2) && !(hits_r || hits_s)) {
            return SettingAxiomFailure{"condition (F1) fails: " + abstract_to_string(t) +
                                       " crosses a corner of " + pair_text +
                                       " but neither member"};
          }
          if ((hits_c1 && hits_c2) && !(hits_r && hits_s)) {
            return SettingAxiomFailure{"condition (F2) fails: " + abstract_to_string(t) +
                                       " crosses both opposite corners of " + pair_text +
                                       " but not both members"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Abstract counterpart of the entanglement engine's situation table. The
// crossing partner ranges over S, and candidacy requires membership in S in
// place of the graph notion of properness.
struct AbstractTable {
  std::vector<std::uint8_t> dead;
  struct Situation {
    int owner;
    int cand[2];  // -1 when absent; distinct when both present
  };
  std::vector<Situation> situations;
  std::vector<std::vector<int>> referencing;  // element index -> situation ids
};

AbstractTable build_abstract_table(const UncrossingSetting& setting) {
  const auto& el = setting.elements;
  AbstractTable tab;
  std::unordered_map<AbstractSeparation, int, AbstractSeparationHash> index;
  for (std::size_t i = 0; i < el.size(); ++i) {
    index.emplace(el[i], static_cast<int>(i));
  }
  tab.dead.assign(el.size(), 0);
  tab.referencing.assign(el.size(), {});
  for (std::size_t ri = 0; ri < el.size(); ++ri) {
    const AbstractSeparation& r = el[ri];
    const long long ord = setting.order(r);
    for (const AbstractSeparation& s : el) {
      if (!setting.crosses(r, s)) continue;
      for (int side = 0; side < 2 && !tab.dead[ri]; ++side) {
        AbstractSeparation c1 = setting.corner(r, side, s, 0);
        AbstractSeparation c2 = setting.corner(r, side, s, 1);
        if (setting.order(c1) > ord || setting.order(c2) > ord) continue;
        AbstractTable::Situation sit{static_cast<int>(ri), {-1, -1}};
        int found = 0;
        for (const AbstractSeparation* c : {&c1, &c2}) {
          if (setting.order(*c) != ord) continue;
          auto it = index.find(*c);
          if (it == index.end()) continue;
          if (found == 1 && sit.cand[0] == it->second) continue;  // same corner twice
          sit.cand[found++] = it->second;
        }
        if (found == 0) {
          tab.dead[ri] = 1;  // no abstract entanglement can contain r
        } else {
          int id = static_cast<int>(tab.situations.size());
          tab.situations.push_back(sit);
          for (int c = 0; c < found; ++c) tab.referencing[sit.cand[c]].push_back(id);
        }
      }
      if (tab.dead[ri]) break;
    }
  }
  return tab;
}

// Downward iteration to the greatest fixed point inside the given start set,
// identical in shape to the graph engine's cascade.
std::vector<std::uint8_t> abstract_gfp_live(const AbstractTable& tab,
                                            std::vector<std::uint8_t> live) {
  std::vector<int> count(tab.situations.size(), 0);
  for (std::size_t sid = 0; sid < tab.situations.size(); ++sid) {
    for (int c : tab.situations[sid].cand) {
      if (c >= 0) ++count[sid];
    }
  }
  std::vector<int> queue;
  for (std::size_t i = 0; i < tab.dead.size(); ++i) {
    if (tab.dead[i] && live[i]) live[i] = 0;
    if (!live[i]) queue.push_back(static_cast<int>(i));
  }
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

void require_valid_setting(const UncrossingSetting& setting) {
  if (auto fail = verify_setting_axioms(setting)) {
    throw contract_error("setting fails its axioms: " + fail->description);
  }
}

}  // namespace

std::vector<AbstractSeparation> abstract_max_entanglement(const UncrossingSetting& setting) {
  require_valid_setting(setting);
  AbstractTable tab = build_abstract_table(setting);
  std::vector<std::uint8_t> live =
      abstract_gfp_live(tab, std::vector<std::uint8_t>(setting.elements.size(), 1));
  std::vector<AbstractSeparation> members;
  for (std::size_t i = 0; i < setting.elements.size(); ++i) {
    if (live[i]) members.push_back(setting.elements[i]);
  }
  return members;
}

std::vector<AbstractSeparation> abstract_friendly(const UncrossingSetting& setting) {
  require_valid_setting(setting);
  AbstractTable tab = build_abstract_table(setting);
  std::vector<std::uint8_t> in_union =
      abstract_gfp_live(tab, std::vector<std::uint8_t>(setting.elements.size(), 1));
  std::vector<int> member_ids;
  for (std::size_t i = 0; i < setting.elements.size(); ++i) {
    if (in_union[i]) member_ids.push_back(static_cast<int>(i));
  }
  // Crossing numbers against the union of all abstract entanglements.
  std::vector<int> x(setting.elements.size(), 0);
  for (std::size_t a = 0; a < member_ids.size(); ++a) {
    for (std::size_t b = a + 1; b < member_ids.size(); ++b) {
      if (setting.crosses(setting.elements[member_ids[a]], setting.elements[member_ids[b]])) {
        ++x[member_ids[a]];
        ++x[member_ids[b]];
      }
    }
  }
  std::vector<int> thresholds;
  for (int i : member_ids) thresholds.push_back(x[i]);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::vector<AbstractSeparation> result;
  for (int c : thresholds) {
    std::vector<std::uint8_t> live(setting.elements.size(), 0);
    for (int i : member_ids) {
      if (x[i] >= c) live[i] = 1;
    }
    live = abstract_gfp_live(tab, std::move(live));
    for (int i : member_ids) {
      if (live[i] && x[i] == c) result.push_back(setting.elements[i]);
    }
  }
  std::sort(result.begin(), result.end(), abstract_less);
  if (auto witness = verify_abstract_nested(setting, result)) {
    throw theorem_violation("abstract friendly separations cross: " +
                            abstract_to_string(witness->first) + " and " +
                            abstract_to_string(witness->second));
  }
  return result;
}

std::optional<std::pair<AbstractSeparation, AbstractSeparation>> verify_abstract_nested(
    const UncrossingSetting& setting, const std::vector<AbstractSeparation>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (setting.crosses(members[i], members[j])) {
        return std::make_pair(members[i], members[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace entangle
