#ifndef VLINK_INVARIANTS_HPP
#define VLINK_INVARIANTS_HPP

#include <string>
#include <vector>

#include "vlink/cuts.hpp"
#include "vlink/diagram.hpp"

#include "json.hpp"

namespace vlink {

long long writhe(const Diagram& d);

// lk[i][j] = signed count of crossings where component i passes over j.
std::vector<std::vector<long long>> linking_matrix(const Diagram& d);

// Sum of signs of the component's odd self-crossings: those interleaved with
// an odd number of the component's other self-crossing chords.  Passages of
// crossings shared with other components do not count; including them would
// make the parity depend on the walking direction whenever the component
// carries an odd number of them, and a lone kink could then turn odd.
long long odd_writhe(const Diagram& d, int component);

// Invariant under the generalized Reidemeister moves; component order
// canonicalized away by minimizing the linking matrix over simultaneous
// row/column permutations.
struct Fingerprint {
  int component_count = 0;
  std::vector<std::vector<long long>> linking_canonical;
  std::vector<long long> odd_writhe_multiset;  // sorted

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string to_string() const;
};

Fingerprint fingerprint(const Diagram& d);

// Compares the m-fold cover of (d, p) against m disjoint copies of d.
// Differing fingerprints certify that no mod-m numberable diagram is
// equivalent to d; equal fingerprints decide nothing.
struct Verdict {
  bool obstructed = false;
  Fingerprint cover_fp;
  Fingerprint union_fp;
};

Verdict obstruct(const Diagram& d, const CutSystem& p, int m);

nlohmann::json invariants_json(const Diagram& d);

}  // namespace vlink

#endif
