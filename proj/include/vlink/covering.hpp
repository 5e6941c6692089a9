#ifndef VLINK_COVERING_HPP
#define VLINK_COVERING_HPP

#include <map>
#include <vector>

#include "vlink/cuts.hpp"
#include "vlink/diagram.hpp"
#include "vlink/numbering.hpp"

namespace vlink {

// Net sheet shift picked up along each component: minus the eps-sum of its
// marks.  Entries sum to zero for a valid cut system.
struct ShiftVector {
  std::vector<long long> t;

  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

ShiftVector component_shifts(const Diagram& d, const CutSystem& p);

struct CrossingOrigin {
  int base_crossing = 0;
  int sheet = 0;
};

struct ComponentOrigin {
  int base_component = 0;
  int start_sheet = 0;
  int wraps = 0;  // base laps before the lift closes: m / gcd(m, t)
};

struct ArcOrigin {
  int base_component = 0;
  int base_gap = 0;
  int sheet = 0;  // sheet while running along this lifted gap
};

// The m-fold cyclic cover: m parallel sheets of each component, spliced at
// the cut marks (crossing a mark drops the sheet by its eps, mod m).
// Crossing copy (c, k) keeps c's sign and gets id (c-1)*m + k + 1.
struct SheetedDiagram {
  Diagram diagram;
  std::map<int, CrossingOrigin> crossing_origin;
  std::vector<ComponentOrigin> component_origin;
  std::vector<std::vector<ArcOrigin>> arc_origin;  // per lifted component, per gap
  int sheets = 1;

  // Base data, kept so induced numberings can be validated.
  Diagram base;
  CutSystem base_cuts;
};

// Requires m >= 1 and a valid cut system; throws Error otherwise.
SheetedDiagram cover(const Diagram& d, const CutSystem& p, int m);

// Lifts an integral numbering f of the base through the covering: the value
// on a lifted arc is f(base arc) + sheet, mod m.  Throws Error when f is not
// an integral solution for the base.
Numbering induced_numbering(const SheetedDiagram& s, const Numbering& f);

}  // namespace vlink

#endif
