#ifndef SPECHTLAB_RANDOM_HPP
#define SPECHTLAB_RANDOM_HPP

#include <cstdint>
#include <random>

namespace spechtlab {

using Rng = std::mt19937_64;

// splitmix64 finalizer; sub-seeds for (seed, index) pairs so parallel trials
// stay reproducible regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t index)
{
  return Rng(derive_seed(seed, index));
}

} // namespace spechtlab

#endif
