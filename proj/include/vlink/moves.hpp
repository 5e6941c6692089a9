#ifndef VLINK_MOVES_HPP
#define VLINK_MOVES_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "vlink/diagram.hpp"

#include "json.hpp"

namespace vlink {

// Generalized Reidemeister moves on the Gauss code.  The purely virtual
// moves do not change the code at all, so they never appear here.
//
// Slots: on a component of length L the insertion slots are 1..L (slot s
// inserts after passage s-1); a free loop has the single slot 0.

struct R1Insert {
  int component = 0;
  int slot = 0;
  int sign = 1;
  bool over_first = true;

  friend bool operator==(const R1Insert&, const R1Insert&) = default;
};

struct R1Delete {
  int crossing = 0;  // its two passages are cyclically adjacent

  friend bool operator==(const R1Delete&, const R1Delete&) = default;
};

struct R2Insert {
  int comp_over = 0;  // strand getting both Over passages
  int slot_over = 0;
  int comp_under = 0;
  int slot_under = 0;
  bool antiparallel = false;

  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};

struct R2Delete {
  int crossing_first = 0;   // Oa immediately before Ob on the over strand
  int crossing_second = 0;  // signs opposite, under passages also adjacent

  friend bool operator==(const R2Delete&, const R2Delete&) = default;
};

struct R3Slide {
  // Three disjoint cyclically-adjacent passage pairs, one per strand, given
  // by (component, first position); each pair is swapped in place.
  std::array<std::pair<int, int>, 3> pair_starts{};

  friend bool operator==(const R3Slide&, const R3Slide&) = default;
};

using RMoveSpec = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Slide>;

enum class MoveFamily { R1Insert, R1Delete, R2Insert, R2Delete, R3Slide };

std::vector<RMoveSpec> enumerate_sites(const Diagram& d, MoveFamily family);

// Throws Error when the spec does not apply to d.
Diagram apply_move(const Diagram& d, const RMoveSpec& mv);

nlohmann::json move_to_json(const RMoveSpec& mv);
RMoveSpec move_from_json(const nlohmann::json& j);

struct WalkResult {
  Diagram diagram;
  std::vector<RMoveSpec> log;
};

// Applies `steps` moves, each drawn uniformly from all applicable sites of
// all families.  Stops early if no site exists (bare free loops aside, that
// cannot happen).
WalkResult random_walk(const Diagram& d, int steps, std::uint64_t seed);

}  // namespace vlink

#endif
