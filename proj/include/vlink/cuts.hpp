#ifndef VLINK_CUTS_HPP
#define VLINK_CUTS_HPP

#include <compare>
#include <map>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

// Oriented cut mark on a semi-arc.  eps = +1 when the mark is coherent with
// the traversal direction, -1 when incoherent.  Marks on one semi-arc are
// ordered along it by ordinal, starting at 0.
struct CutPoint {
  SemiArcId arc;
  int ordinal = 0;
  int eps = 1;

  friend auto operator<=>(const CutPoint&, const CutPoint&) = default;
};

// Kept sorted by (component, gap, ordinal).
struct CutSystem {
  std::vector<CutPoint> marks;

  friend bool operator==(const CutSystem&, const CutSystem&) = default;
};

void normalize(CutSystem& p);

// eps values per semi-arc in ordinal order.
std::map<SemiArcId, std::vector<int>> marks_by_arc(const CutSystem& p);

// Throws Error if a mark names a missing component/gap or ordinals are not
// dense from 0 on some semi-arc.
void check_located(const Diagram& d, const CutSystem& p);

// Two marks per crossing, placed so the numbering that is zero away from the
// crossings solves the constraints.
CutSystem canonical_cut_system(const Diagram& d);

struct Balance {
  long long coherent = 0;
  long long incoherent = 0;

  friend bool operator==(const Balance&, const Balance&) = default;
};

Balance balance(const CutSystem& p);

struct CutMove {
  enum class Kind {
    InsertPair,      // adjacent +/- pair at `position` on `arc`; lead_eps first
    DeletePair,      // cancel marks (position, position+1), cyclic on loops
    SwapAdjacent,    // transpose opposite marks (position, position+1)
    PushAtCrossing,  // move the crossing's canonical pair to the far side
    PullAtCrossing,  // inverse of PushAtCrossing
  };

  Kind kind = Kind::InsertPair;
  SemiArcId arc{};
  int position = 0;
  int lead_eps = 1;
  int crossing = 0;

  friend bool operator==(const CutMove&, const CutMove&) = default;
};

// Complete, deterministically ordered list of applicable moves.
std::vector<CutMove> enumerate_cut_moves(const Diagram& d, const CutSystem& p);

// Throws Error when the move does not apply to (d, p).
CutSystem apply_cut_move(const Diagram& d, const CutSystem& p, const CutMove& mv);

}  // namespace vlink

#endif
