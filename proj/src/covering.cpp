#include "vlink/covering.hpp"

#include <algorithm>

namespace vlink {

ShiftVector component_shifts(const Diagram& d, const CutSystem& p) {
  check_located(d, p);
  ShiftVector sv;
  sv.t.assign(d.components.size(), 0);
  for (const CutPoint& m : p.marks) sv.t[m.arc.component] -= m.eps;
  return sv;
}

namespace {

struct Event {
  bool is_mark = false;
  // passage fields
  int crossing = 0;
  Role role = Role::Over;
  int gap = 0;  // gap following the passage
  // mark field
  int eps = 0;
};

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

SheetedDiagram cover(const Diagram& d, const CutSystem& p, int m) {
  if (m < 1) throw Error("cover needs m >= 1");
  if (auto bad = validate(d); !bad.empty()) throw Error(to_string(bad.front()));
  if (!is_cut_system(d, p)) throw Error("marks are not a cut system");

  auto marks = marks_by_arc(p);
  SheetedDiagram out;
  out.sheets = m;
  out.base = d;
  out.base_cuts = p;

  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    std::vector<Event> events;
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      events.push_back({false, comp[i].crossing, comp[i].role, i, 0});
      if (auto it = marks.find(SemiArcId{c, i}); it != marks.end())
        for (int eps : it->second) events.push_back({true, 0, Role::Over, 0, eps});
    }
    if (comp.empty())
      if (auto it = marks.find(SemiArcId{c, 0}); it != marks.end())
        for (int eps : it->second) events.push_back({true, 0, Role::Over, 0, eps});

    std::vector<char> consumed(m, 0);
    for (int s = 0; s < m; ++s) {
      if (consumed[s]) continue;
      // Lift the component starting on sheet s: every crossing copy keeps
      // the base sign, copy (c, k) takes id (c-1)*m + k + 1, and passing a
      // mark drops the sheet by its eps.
      std::vector<Passage> lifted;
      std::vector<ArcOrigin> origins;
      if (comp.empty()) origins.push_back({c, 0, s});
      int wraps = 0;
      int k = s;
      do {
        consumed[k] = 1;
        ++wraps;
        for (const Event& ev : events) {
          if (ev.is_mark) {
            k = mod(k - ev.eps, m);
            continue;
          }
          int id = (ev.crossing - 1) * m + k + 1;
          lifted.push_back({id, ev.role});
          out.diagram.signs[id] = d.signs.at(ev.crossing);
          out.crossing_origin[id] = {ev.crossing, k};
          origins.push_back({c, ev.gap, k});
        }
      } while (k != s);
      out.component_origin.push_back({c, s, wraps});
      out.arc_origin.push_back(std::move(origins));
      out.diagram.components.push_back(std::move(lifted));
    }
  }
  return out;
}

Numbering induced_numbering(const SheetedDiagram& s, const Numbering& f) {
  if (f.modulus != 0) throw Error("induced numbering needs an integral base numbering");
  ConstraintGraph base_graph = build_constraints(s.base, s.base_cuts);
  if (!satisfies(base_graph, f))
    throw Error("numbering does not solve the base diagram");

  Numbering out;
  out.modulus = s.sheets;
  for (int nc = 0; nc < static_cast<int>(s.diagram.components.size()); ++nc) {
    const auto& origins = s.arc_origin[nc];
    for (int g = 0; g < static_cast<int>(origins.size()); ++g) {
      const ArcOrigin& ao = origins[g];
      long long base_value = f.values.at({{ao.base_component, ao.base_gap}, 0});
      long long value = (base_value + ao.sheet) % s.sheets;
      out.values[{{nc, g}, 0}] = value < 0 ? value + s.sheets : value;
    }
  }
  return out;
}

}  // namespace vlink
