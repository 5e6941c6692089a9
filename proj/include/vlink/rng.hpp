#ifndef VLINK_RNG_HPP
#define VLINK_RNG_HPP

#include <cstdint>

namespace vlink {

// Deterministic 64-bit LCG (Knuth's MMIX multiplier), identical output on
// every platform.  Used wherever a seed appears in the public interface so
// that runs are reproducible byte for byte.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform value in [0, bound) via 128-bit multiply; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  int sign() { return below(2) == 0 ? 1 : -1; }

 private:
  std::uint64_t state_;
};

}  // namespace vlink

#endif
