#ifndef VLINK_CANONICAL_HPP
#define VLINK_CANONICAL_HPP

#include <compare>
#include <string>

#include "vlink/diagram.hpp"

namespace vlink {

// Canonical form of a diagram: equal keys exactly when the diagrams differ
// only by component order, cyclic rotation of components, and crossing
// relabeling.
struct CanonicalKey {
  std::string key;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const Diagram& d);

inline bool isomorphic(const Diagram& a, const Diagram& b) {
  return canonical_key(a) == canonical_key(b);
}

}  // namespace vlink

#endif
