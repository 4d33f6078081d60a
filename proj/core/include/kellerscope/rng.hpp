#pragma once

#include <cstdint>

namespace kellerscope {

// Splittable counter-based generator (splitmix64 core). A value, not ambient
// state: pass by value to give a callee its own stream.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  // Uniform in [lo, hi] inclusive.
  long next_range(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rng split() {
    Rng child(next_u64() ^ 0xd2b74407b1ce6e93ULL);
    return child;
  }

private:
  std::uint64_t state_;
};

}  // namespace kellerscope
