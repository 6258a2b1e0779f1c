#pragma once

#include <cstdint>
#include <random>

namespace downset {
  // Seeded generator whose outputs do not depend on the standard library
  // implementation: mt19937_64 is fully specified, and bounded draws use
  // plain reduction instead of a distribution object.
  class rng {
    public:
      explicit rng (std::uint64_t seed) : gen {seed} {}

      std::uint64_t next () { return gen (); }
      // Uniform-ish draw in [0, bound); bound must be positive.
      std::uint64_t below (std::uint64_t bound) { return gen () % bound; }
      // Inclusive range [lo, hi].
      std::uint64_t between (std::uint64_t lo, std::uint64_t hi) { return lo + below (hi - lo + 1); }

    private:
      std::mt19937_64 gen;
  };

  // Independent child seed for stream `stream` of `root` (splitmix64 finalizer).
  constexpr std::uint64_t derive_seed (std::uint64_t root, std::uint64_t stream) noexcept {
    std::uint64_t z = root ^ (stream + 0x9e3779b97f4a7c15ULL + (root << 6) + (root >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
}
