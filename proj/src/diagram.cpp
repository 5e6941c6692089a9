#include "vlink/diagram.hpp"

#include <algorithm>
#include <set>

#include "vlink/rng.hpp"

namespace vlink {

int crossing_count(const Diagram& d) {
  return static_cast<int>(d.signs.size());
}

int passage_count(const Diagram& d) {
  int n = 0;
  for (const auto& comp : d.components) n += static_cast<int>(comp.size());
  return n;
}

std::map<int, CrossingRefs> locate_crossings(const Diagram& d) {
  std::map<int, CrossingRefs> refs;
  std::map<int, int> seen;  // id -> bitmask of roles found
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      const Passage& pass = comp[i];
      int bit = pass.role == Role::Over ? 1 : 2;
      if (seen[pass.crossing] & bit)
        throw Error("crossing " + std::to_string(pass.crossing) +
                    " has a duplicate passage");
      seen[pass.crossing] |= bit;
      auto& ref = refs[pass.crossing];
      (pass.role == Role::Over ? ref.over : ref.under) = {c, i};
    }
  }
  for (const auto& [id, mask] : seen)
    if (mask != 3)
      throw Error("crossing " + std::to_string(id) + " is missing a passage");
  return refs;
}

std::vector<SemiArcId> semi_arcs(const Diagram& d) {
  std::vector<SemiArcId> arcs;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    int gaps = std::max<int>(1, static_cast<int>(d.components[c].size()));
    for (int g = 0; g < gaps; ++g) arcs.push_back({c, g});
  }
  return arcs;
}

SemiArcId incoming_gap(const Diagram& d, PassageRef at) {
  int len = static_cast<int>(d.components[at.component].size());
  return {at.component, (at.position + len - 1) % len};
}

SemiArcId outgoing_gap(PassageRef at) {
  return {at.component, at.position};
}

std::vector<Violation> validate(const Diagram& d) {
  std::vector<Violation> out;
  std::map<int, int> overs, unders;
  for (const auto& comp : d.components)
    for (const Passage& p : comp)
      ++(p.role == Role::Over ? overs : unders)[p.crossing];

  std::set<int> ids;
  for (const auto& [id, n] : overs) ids.insert(id);
  for (const auto& [id, n] : unders) ids.insert(id);

  for (int id : ids) {
    if (id < 1)
      out.push_back({Violation::Kind::BadCrossingId, id, "crossing ids start at 1"});
    int o = overs.count(id) ? overs[id] : 0;
    int u = unders.count(id) ? unders[id] : 0;
    if (o != 1 || u != 1)
      out.push_back({Violation::Kind::PairingMismatch, id,
                     "seen " + std::to_string(o) + " over / " +
                         std::to_string(u) + " under passages"});
    if (!d.signs.count(id))
      out.push_back({Violation::Kind::MissingSign, id, "no sign recorded"});
  }
  for (const auto& [id, s] : d.signs) {
    if (!ids.count(id))
      out.push_back({Violation::Kind::OrphanSign, id, "sign without passages"});
    if (s != 1 && s != -1)
      out.push_back({Violation::Kind::BadSign, id,
                     "sign " + std::to_string(s) + " is not +1/-1"});
  }
  return out;
}

std::string to_string(const Violation& v) {
  const char* what = nullptr;
  switch (v.kind) {
    case Violation::Kind::BadCrossingId: what = "bad crossing id"; break;
    case Violation::Kind::PairingMismatch: what = "pairing mismatch"; break;
    case Violation::Kind::MissingSign: what = "missing sign"; break;
    case Violation::Kind::OrphanSign: what = "orphan sign"; break;
    case Violation::Kind::BadSign: what = "bad sign"; break;
  }
  return std::string(what) + " at crossing " + std::to_string(v.crossing) +
         ": " + v.detail;
}

Diagram disjoint_union(std::span<const Diagram> parts) {
  Diagram out;
  int base = 0;
  for (const Diagram& d : parts) {
    std::map<int, int> remap;
    for (const auto& [id, s] : d.signs) {
      remap[id] = ++base;
      out.signs[remap[id]] = s;
    }
    for (const auto& comp : d.components) {
      auto& nc = out.components.emplace_back();
      nc.reserve(comp.size());
      for (const Passage& p : comp) nc.push_back({remap.at(p.crossing), p.role});
    }
  }
  return out;
}

Diagram torus2q(int q) {
  if (q < 1) throw Error("torus2q needs q >= 1");
  std::vector<Passage> first, second;
  for (int i = 1; i <= q; ++i) {
    first.push_back({i, i % 2 == 1 ? Role::Over : Role::Under});
    second.push_back({i, i % 2 == 1 ? Role::Under : Role::Over});
  }
  Diagram d;
  if (q % 2 == 1) {
    first.insert(first.end(), second.begin(), second.end());
    d.components.push_back(std::move(first));
  } else {
    d.components.push_back(std::move(first));
    d.components.push_back(std::move(second));
  }
  for (int i = 1; i <= q; ++i) d.signs[i] = 1;
  return d;
}

Diagram virtual_trefoil() {
  Diagram d;
  d.components.push_back({{1, Role::Over}, {2, Role::Over}, {1, Role::Under}, {2, Role::Under}});
  d.signs = {{1, 1}, {2, 1}};
  return d;
}

Diagram hopf_link() { return torus2q(2); }

Diagram random_diagram(int crossings, int components, std::uint64_t seed) {
  if (crossings < 0 || components < 1)
    throw Error("random_diagram needs crossings >= 0, components >= 1");
  Lcg rng(seed);
  int slots = 2 * crossings;

  // Component sizes: a random composition of `slots` into `components` parts.
  std::vector<int> cuts;
  for (int i = 0; i + 1 < components; ++i)
    cuts.push_back(static_cast<int>(rng.below(slots + 1)));
  cuts.push_back(slots);
  std::sort(cuts.begin(), cuts.end());

  // A shuffled list of slot positions, paired off into crossings.
  std::vector<int> order(slots);
  for (int i = 0; i < slots; ++i) order[i] = i;
  for (int i = slots - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);

  std::vector<Passage> flat(slots);
  for (int k = 0; k < crossings; ++k) {
    flat[order[2 * k]] = {k + 1, Role::Over};
    flat[order[2 * k + 1]] = {k + 1, Role::Under};
  }

  Diagram d;
  int at = 0;
  for (int end : cuts) {
    d.components.emplace_back(flat.begin() + at, flat.begin() + end);
    at = end;
  }
  for (int k = 1; k <= crossings; ++k) d.signs[k] = rng.sign();
  return d;
}

}  // namespace vlink
