#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qdmotif {

using Rng = std::mt19937_64;

// splitmix64 finalizer. Used only for deriving well-separated stream seeds,
// never as the generator itself.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives the seed of a named sub-stream from the master seed. Every random
// decision in a run pulls from a stream derived this way, so a master seed
// pins the whole experiment. Tags are small integers documented at the call
// sites (purpose, subset index, characterization index).
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = mix64(master);
  for (std::uint64_t t : tags) s = mix64(s ^ t);
  return s;
}

}  // namespace qdmotif
