#include "vlink/moves.hpp"

#include <algorithm>
#include <set>

#include "vlink/rng.hpp"

namespace vlink {

namespace {

int max_crossing_id(const Diagram& d) {
  return d.signs.empty() ? 0 : d.signs.rbegin()->first;
}

// Insertion slots: 1..L so that slot s means "after passage s-1"; a free
// loop exposes the single slot 0.
std::vector<int> slots_of(const Diagram& d, int comp) {
  int len = static_cast<int>(d.components[comp].size());
  std::vector<int> slots;
  if (len == 0) {
    slots.push_back(0);
  } else {
    for (int s = 1; s <= len; ++s) slots.push_back(s);
  }
  return slots;
}

bool valid_slot(const Diagram& d, int comp, int slot) {
  if (comp < 0 || comp >= static_cast<int>(d.components.size())) return false;
  int len = static_cast<int>(d.components[comp].size());
  return len == 0 ? slot == 0 : slot >= 1 && slot <= len;
}

void remove_positions(std::vector<Passage>& comp, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<>());
  for (int pos : positions) comp.erase(comp.begin() + pos);
}

struct AdjPair {
  int comp = 0;
  int pos = 0;  // pair (pos, pos+1 mod len)
  int first_crossing = 0;
  int second_crossing = 0;
  int over_count = 0;
};

std::vector<AdjPair> adjacent_pairs(const Diagram& d) {
  std::vector<AdjPair> pairs;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    if (len < 2) continue;
    for (int i = 0; i < len; ++i) {
      const Passage& a = comp[i];
      const Passage& b = comp[(i + 1) % len];
      if (a.crossing == b.crossing) continue;
      int overs = (a.role == Role::Over) + (b.role == Role::Over);
      pairs.push_back({c, i, a.crossing, b.crossing, overs});
    }
  }
  return pairs;
}

// The three pairs of an R3 site: disjoint, three distinct crossings each
// shared by two pairs (a triangle), over-counts 2/1/0 (a consistent height
// order), and a locally planar chirality.  The last part matters: drawing
// the three strands as straight lines, the crossing signs pin down their
// directions, and the directions force the order in which each strand meets
// its two crossings relative to the others.  Triples with the wrong order
// pattern look like slides but are not planar at the triangle, and swapping
// them changes stronger invariants than the shape of the code suggests.
bool triangle_site(const Diagram& d, const AdjPair& x, const AdjPair& y,
                   const AdjPair& z) {
  std::set<std::pair<int, int>> positions;
  for (const AdjPair* p : {&x, &y, &z}) {
    int len = static_cast<int>(d.components[p->comp].size());
    positions.insert({p->comp, p->pos});
    positions.insert({p->comp, (p->pos + 1) % len});
  }
  if (positions.size() != 6) return false;

  std::map<int, int> uses;
  for (const AdjPair* p : {&x, &y, &z}) {
    if (p->first_crossing == p->second_crossing) return false;
    ++uses[p->first_crossing];
    ++uses[p->second_crossing];
  }
  if (uses.size() != 3) return false;
  for (const auto& [id, n] : uses)
    if (n != 2) return false;

  const AdjPair* strand[3] = {nullptr, nullptr, nullptr};  // [bottom, middle, top]
  for (const AdjPair* p : {&x, &y, &z}) {
    if (p->over_count < 0 || p->over_count > 2 || strand[p->over_count])
      return false;
    strand[p->over_count] = p;
  }
  const AdjPair &bot = *strand[0], &mid = *strand[1], &top = *strand[2];

  auto shared = [](const AdjPair& p, const AdjPair& q) {
    return p.first_crossing == q.first_crossing ||
                   p.first_crossing == q.second_crossing
               ? p.first_crossing
               : p.second_crossing;
  };
  int c_tm = shared(top, mid);  // top over middle
  int c_tb = shared(top, bot);  // top over bottom
  int c_mb = shared(mid, bot);  // middle over bottom

  // Orientation of each pair: +1 when the top/middle crossing comes first.
  int e_t = top.first_crossing == c_tm ? 1 : -1;
  int e_m = mid.first_crossing == c_tm ? 1 : -1;
  int e_b = bot.first_crossing == c_tb ? 1 : -1;
  return e_t * e_m == d.signs.at(c_tb) * d.signs.at(c_mb) &&
         e_t * e_b == d.signs.at(c_tm) * d.signs.at(c_mb);
}

}  // namespace

std::vector<RMoveSpec> enumerate_sites(const Diagram& d, MoveFamily family) {
  std::vector<RMoveSpec> sites;
  switch (family) {
    case MoveFamily::R1Insert: {
      for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
        for (int slot : slots_of(d, c))
          for (int sign : {+1, -1})
            for (bool over_first : {true, false})
              sites.push_back(R1Insert{c, slot, sign, over_first});
      break;
    }
    case MoveFamily::R1Delete: {
      auto refs = locate_crossings(d);
      for (const auto& [id, ref] : refs) {
        if (ref.over.component != ref.under.component) continue;
        int len = static_cast<int>(d.components[ref.over.component].size());
        int gap = (ref.under.position - ref.over.position + len) % len;
        if (gap == 1 || gap == len - 1) sites.push_back(R1Delete{id});
      }
      break;
    }
    case MoveFamily::R2Insert: {
      for (int co = 0; co < static_cast<int>(d.components.size()); ++co)
        for (int so : slots_of(d, co))
          for (int cu = 0; cu < static_cast<int>(d.components.size()); ++cu)
            for (int su : slots_of(d, cu))
              for (bool anti : {false, true})
                sites.push_back(R2Insert{co, so, cu, su, anti});
      break;
    }
    case MoveFamily::R2Delete: {
      auto refs = locate_crossings(d);
      std::set<std::set<std::pair<int, int>>> seen;
      for (const auto& [a, ra] : refs)
        for (const auto& [b, rb] : refs) {
          if (a == b) continue;
          if (d.signs.at(a) != -d.signs.at(b)) continue;
          if (ra.over.component != rb.over.component) continue;
          if (ra.under.component != rb.under.component) continue;
          int lo = static_cast<int>(d.components[ra.over.component].size());
          int lu = static_cast<int>(d.components[ra.under.component].size());
          if ((rb.over.position - ra.over.position + lo) % lo != 1) continue;
          int du = (rb.under.position - ra.under.position + lu) % lu;
          if (du != 1 && du != lu - 1) continue;  // Ua Ub or Ub Ua
          std::set<std::pair<int, int>> sig{
              {ra.over.component, ra.over.position},
              {rb.over.component, rb.over.position},
              {ra.under.component, ra.under.position},
              {rb.under.component, rb.under.position}};
          if (sig.size() != 4 || !seen.insert(sig).second) continue;
          sites.push_back(R2Delete{a, b});
        }
      break;
    }
    case MoveFamily::R3Slide: {
      auto pairs = adjacent_pairs(d);
      int n = static_cast<int>(pairs.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            if (triangle_site(d, pairs[i], pairs[j], pairs[k])) {
              R3Slide mv;
              mv.pair_starts = {std::pair{pairs[i].comp, pairs[i].pos},
                                {pairs[j].comp, pairs[j].pos},
                                {pairs[k].comp, pairs[k].pos}};
              sites.push_back(mv);
            }
      break;
    }
  }
  return sites;
}

namespace {

Diagram apply_r1_insert(const Diagram& d, const R1Insert& mv) {
  if (!valid_slot(d, mv.component, mv.slot)) throw Error("r1 insert: bad slot");
  if (mv.sign != 1 && mv.sign != -1) throw Error("r1 insert: bad sign");
  Diagram out = d;
  int id = max_crossing_id(d) + 1;
  auto& comp = out.components[mv.component];
  Passage first{id, mv.over_first ? Role::Over : Role::Under};
  Passage second{id, mv.over_first ? Role::Under : Role::Over};
  comp.insert(comp.begin() + mv.slot, {first, second});
  out.signs[id] = mv.sign;
  return out;
}

Diagram apply_r1_delete(const Diagram& d, const R1Delete& mv) {
  auto refs = locate_crossings(d);
  auto it = refs.find(mv.crossing);
  if (it == refs.end()) throw Error("r1 delete: no such crossing");
  const CrossingRefs& r = it->second;
  if (r.over.component != r.under.component) throw Error("r1 delete: not a kink");
  int len = static_cast<int>(d.components[r.over.component].size());
  int gap = (r.under.position - r.over.position + len) % len;
  if (gap != 1 && gap != len - 1) throw Error("r1 delete: passages not adjacent");
  Diagram out = d;
  remove_positions(out.components[r.over.component],
                   {r.over.position, r.under.position});
  out.signs.erase(mv.crossing);
  return out;
}

Diagram apply_r2_insert(const Diagram& d, const R2Insert& mv) {
  if (!valid_slot(d, mv.comp_over, mv.slot_over) ||
      !valid_slot(d, mv.comp_under, mv.slot_under))
    throw Error("r2 insert: bad slot");
  Diagram out = d;
  int a = max_crossing_id(d) + 1;
  int b = a + 1;
  std::vector<Passage> overs{{a, Role::Over}, {b, Role::Over}};
  std::vector<Passage> unders = mv.antiparallel
                                    ? std::vector<Passage>{{b, Role::Under}, {a, Role::Under}}
                                    : std::vector<Passage>{{a, Role::Under}, {b, Role::Under}};
  auto insert_at = [&](int comp, int slot, const std::vector<Passage>& ps) {
    auto& v = out.components[comp];
    v.insert(v.begin() + slot, ps.begin(), ps.end());
  };
  if (mv.comp_over != mv.comp_under) {
    insert_at(mv.comp_over, mv.slot_over, overs);
    insert_at(mv.comp_under, mv.slot_under, unders);
  } else if (mv.slot_under >= mv.slot_over) {
    // Larger slot first so the other slot still points at its original gap;
    // equal slots leave the under pair right after the over pair.
    insert_at(mv.comp_under, mv.slot_under, unders);
    insert_at(mv.comp_over, mv.slot_over, overs);
  } else {
    insert_at(mv.comp_over, mv.slot_over, overs);
    insert_at(mv.comp_under, mv.slot_under, unders);
  }
  out.signs[a] = mv.antiparallel ? -1 : 1;
  out.signs[b] = mv.antiparallel ? 1 : -1;
  return out;
}

Diagram apply_r2_delete(const Diagram& d, const R2Delete& mv) {
  auto refs = locate_crossings(d);
  if (!refs.count(mv.crossing_first) || !refs.count(mv.crossing_second))
    throw Error("r2 delete: no such crossing");
  int a = mv.crossing_first, b = mv.crossing_second;
  if (a == b) throw Error("r2 delete: needs two crossings");
  if (d.signs.at(a) != -d.signs.at(b)) throw Error("r2 delete: signs not opposite");
  const CrossingRefs& ra = refs.at(a);
  const CrossingRefs& rb = refs.at(b);
  if (ra.over.component != rb.over.component ||
      ra.under.component != rb.under.component)
    throw Error("r2 delete: passages not paired on two strands");
  int lo = static_cast<int>(d.components[ra.over.component].size());
  int lu = static_cast<int>(d.components[ra.under.component].size());
  if ((rb.over.position - ra.over.position + lo) % lo != 1)
    throw Error("r2 delete: over passages not adjacent");
  int du = (rb.under.position - ra.under.position + lu) % lu;
  if (du != 1 && du != lu - 1)
    throw Error("r2 delete: under passages not adjacent");
  std::set<std::pair<int, int>> sig{{ra.over.component, ra.over.position},
                                    {rb.over.component, rb.over.position},
                                    {ra.under.component, ra.under.position},
                                    {rb.under.component, rb.under.position}};
  if (sig.size() != 4) throw Error("r2 delete: degenerate site");

  Diagram out = d;
  std::map<int, std::vector<int>> by_comp;
  by_comp[ra.over.component].push_back(ra.over.position);
  by_comp[rb.over.component].push_back(rb.over.position);
  by_comp[ra.under.component].push_back(ra.under.position);
  by_comp[rb.under.component].push_back(rb.under.position);
  for (auto& [comp, positions] : by_comp)
    remove_positions(out.components[comp], positions);
  out.signs.erase(a);
  out.signs.erase(b);
  return out;
}

Diagram apply_r3(const Diagram& d, const R3Slide& mv) {
  auto pairs = adjacent_pairs(d);
  std::vector<AdjPair> chosen;
  for (const auto& [comp, pos] : mv.pair_starts) {
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const AdjPair& p) {
      return p.comp == comp && p.pos == pos;
    });
    if (it == pairs.end()) throw Error("r3: no adjacent pair at site");
    chosen.push_back(*it);
  }
  if (!triangle_site(d, chosen[0], chosen[1], chosen[2]))
    throw Error("r3: pairs do not form a slide triangle");
  Diagram out = d;
  for (const AdjPair& p : chosen) {
    auto& comp = out.components[p.comp];
    int len = static_cast<int>(comp.size());
    std::swap(comp[p.pos], comp[(p.pos + 1) % len]);
  }
  return out;
}

}  // namespace

Diagram apply_move(const Diagram& d, const RMoveSpec& mv) {
  return std::visit(
      [&](const auto& m) -> Diagram {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, R1Insert>) return apply_r1_insert(d, m);
        if constexpr (std::is_same_v<T, R1Delete>) return apply_r1_delete(d, m);
        if constexpr (std::is_same_v<T, R2Insert>) return apply_r2_insert(d, m);
        if constexpr (std::is_same_v<T, R2Delete>) return apply_r2_delete(d, m);
        if constexpr (std::is_same_v<T, R3Slide>) return apply_r3(d, m);
      },
      mv);
}

nlohmann::json move_to_json(const RMoveSpec& mv) {
  nlohmann::json j;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          j = {{"move", "r1-insert"},
               {"component", m.component},
               {"slot", m.slot},
               {"sign", m.sign},
               {"over_first", m.over_first}};
        } else if constexpr (std::is_same_v<T, R1Delete>) {
          j = {{"move", "r1-delete"}, {"crossing", m.crossing}};
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          j = {{"move", "r2-insert"},
               {"comp_over", m.comp_over},
               {"slot_over", m.slot_over},
               {"comp_under", m.comp_under},
               {"slot_under", m.slot_under},
               {"antiparallel", m.antiparallel}};
        } else if constexpr (std::is_same_v<T, R2Delete>) {
          j = {{"move", "r2-delete"},
               {"crossing_first", m.crossing_first},
               {"crossing_second", m.crossing_second}};
        } else {
          j = {{"move", "r3-slide"},
               {"pairs", {{m.pair_starts[0].first, m.pair_starts[0].second},
                          {m.pair_starts[1].first, m.pair_starts[1].second},
                          {m.pair_starts[2].first, m.pair_starts[2].second}}}};
        }
      },
      mv);
  return j;
}

RMoveSpec move_from_json(const nlohmann::json& j) {
  std::string kind = j.at("move");
  if (kind == "r1-insert")
    return R1Insert{j.at("component"), j.at("slot"), j.at("sign"), j.at("over_first")};
  if (kind == "r1-delete") return R1Delete{j.at("crossing")};
  if (kind == "r2-insert")
    return R2Insert{j.at("comp_over"), j.at("slot_over"), j.at("comp_under"),
                    j.at("slot_under"), j.at("antiparallel")};
  if (kind == "r2-delete")
    return R2Delete{j.at("crossing_first"), j.at("crossing_second")};
  if (kind == "r3-slide") {
    R3Slide mv;
    const auto& pairs = j.at("pairs");
    for (int i = 0; i < 3; ++i)
      mv.pair_starts[i] = {pairs.at(i).at(0), pairs.at(i).at(1)};
    return mv;
  }
  throw Error("unknown move kind '" + kind + "'");
}

WalkResult random_walk(const Diagram& d, int steps, std::uint64_t seed) {
  Lcg rng(seed);
  WalkResult result{d, {}};
  constexpr MoveFamily families[] = {MoveFamily::R1Insert, MoveFamily::R1Delete,
                                     MoveFamily::R2Insert, MoveFamily::R2Delete,
                                     MoveFamily::R3Slide};
  for (int step = 0; step < steps; ++step) {
    std::vector<RMoveSpec> sites;
    for (MoveFamily f : families) {
      auto more = enumerate_sites(result.diagram, f);
      sites.insert(sites.end(), more.begin(), more.end());
    }
    if (sites.empty()) break;
    const RMoveSpec& pick = sites[rng.below(sites.size())];
    result.diagram = apply_move(result.diagram, pick);
    result.log.push_back(pick);
  }
  return result;
}

}  // namespace vlink
