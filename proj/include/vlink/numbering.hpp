#ifndef VLINK_NUMBERING_HPP
#define VLINK_NUMBERING_HPP

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "vlink/cuts.hpp"
#include "vlink/diagram.hpp"

namespace vlink {

// Piece of a semi-arc between cut marks.  A gap with k marks has segments
// 0..k (segment j ends at mark j).  A free loop with k >= 1 marks has
// segments 0..k-1, cyclically; with no marks it is its single segment 0.
struct ArcId {
  SemiArcId arc;
  int segment = 0;

  friend auto operator<=>(const ArcId&, const ArcId&) = default;
};

std::string to_string(const ArcId& a);

struct DiffEdge {
  enum class Source { Crossing, CutMark };

  ArcId from;
  ArcId to;
  int offset = 0;  // required value(to) - value(from)
  Source source = Source::Crossing;
  int source_id = 0;  // crossing id, or the mark's index in the cut system

  friend bool operator==(const DiffEdge&, const DiffEdge&) = default;
};

struct ConstraintGraph {
  std::vector<ArcId> nodes;  // sorted; every arc of (d, p) appears
  std::vector<DiffEdge> edges;
};

std::vector<ArcId> arcs_of(const Diagram& d, const CutSystem& p);

// Difference constraints of an Alexander numbering: across a crossing the
// four incident arcs satisfy
//   positive: f(over-out) = f(over-in) - 1,  f(under-out) = f(under-in) + 1,
//             f(under-in) = f(over-in) - 1
//   negative: the three offsets negated
// and crossing a cut mark adds eps.  Requires valid d and located p.
ConstraintGraph build_constraints(const Diagram& d, const CutSystem& p);

struct Numbering {
  long long modulus = 0;  // 0 means over the integers
  std::map<ArcId, long long> values;
};

struct WitnessStep {
  DiffEdge edge;
  int direction = 1;  // +1 traversed from->to, -1 the reverse
};

// Cycle whose offsets sum to a nonzero residue mod m: no numbering exists.
struct WitnessCycle {
  std::vector<WitnessStep> steps;
  long long residual = 0;
};

using SolveResult = std::variant<Numbering, WitnessCycle>;

// Propagates values over each connected part; modulus 0 solves over the
// integers.  Deterministic: nodes seeded in sorted order with value 0.
SolveResult solve(const ConstraintGraph& g, long long modulus);

bool satisfies(const ConstraintGraph& g, const Numbering& f);

// gcd of |cycle defect| over a fundamental cycle basis; 0 when solvable
// over the integers.  A mod-m numbering exists iff m divides this.
long long defect_gcd(const ConstraintGraph& g);

// Checks the jump rule for an integral numbering f of (d, p): across each
// semi-arc the value changes by (#coherent - #incoherent) marks, and each
// free loop is balanced.
bool check_jump(const Diagram& d, const CutSystem& p, const Numbering& f);

// p is a valid cut system: the constraints admit an integral numbering.
bool is_cut_system(const Diagram& d, const CutSystem& p);

}  // namespace vlink

#endif
