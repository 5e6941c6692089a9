#ifndef VLINK_DIAGRAM_HPP
#define VLINK_DIAGRAM_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlink {

// Domain failure (bad input, inapplicable move, invalid cut system).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Role : std::uint8_t { Over, Under };

struct Passage {
  int crossing = 0;
  Role role = Role::Over;

  friend auto operator<=>(const Passage&, const Passage&) = default;
};

// A virtual link diagram as a multi-component signed Gauss code.
// Each component is the cyclic sequence of crossing passages met when
// traversing it; virtual crossings are not recorded at all.  An empty
// passage list is a free loop.
struct Diagram {
  std::vector<std::vector<Passage>> components;
  std::map<int, int> signs;  // crossing id -> +1 or -1

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Semi-arc between consecutive passages: gap g of a component runs from
// passage g to passage g+1 (cyclically).  A free loop is its single gap 0.
struct SemiArcId {
  int component = 0;
  int gap = 0;

  friend auto operator<=>(const SemiArcId&, const SemiArcId&) = default;
};

struct PassageRef {
  int component = 0;
  int position = 0;

  friend auto operator<=>(const PassageRef&, const PassageRef&) = default;
};

struct CrossingRefs {
  PassageRef over;
  PassageRef under;
};

int crossing_count(const Diagram& d);
int passage_count(const Diagram& d);

// Where each crossing's two passages sit.  Requires a diagram that passed
// validate(); throws Error otherwise.
std::map<int, CrossingRefs> locate_crossings(const Diagram& d);

std::vector<SemiArcId> semi_arcs(const Diagram& d);

// Gap ending at the given passage (the wrap gap when position == 0).
SemiArcId incoming_gap(const Diagram& d, PassageRef at);
// Gap starting at the given passage.
SemiArcId outgoing_gap(PassageRef at);

struct Violation {
  enum class Kind {
    BadCrossingId,     // id < 1
    PairingMismatch,   // id does not occur exactly once as Over and once as Under
    MissingSign,       // id used in a component but absent from signs
    OrphanSign,        // signs entry for an id no component mentions
    BadSign,           // sign value other than +1/-1
  };
  Kind kind;
  int crossing = 0;
  std::string detail;
};

std::vector<Violation> validate(const Diagram& d);
std::string to_string(const Violation& v);

// Relabels crossings so the inputs use disjoint id ranges, concatenating
// components in order.
Diagram disjoint_union(std::span<const Diagram> parts);

// Generators.
Diagram torus2q(int q);          // the (2,q) torus code; q >= 1 (even q gives two components)
Diagram virtual_trefoil();       // O1+ O2+ U1+ U2+
Diagram hopf_link();             // torus2q(2)
Diagram random_diagram(int crossings, int components, std::uint64_t seed);

}  // namespace vlink

#endif
