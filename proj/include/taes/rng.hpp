#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace taes {

// std::mt19937_64 output is fully specified by the standard, but any use of
// std::uniform_int_distribution or std::shuffle is not. Deterministic splits
// and training shuffles therefore go through the helpers below, which are
// pinned here and never through <random> distributions.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, tag), e.g. one stream per topic in a split.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag + 0x9E3779B97F4A7C15ULL));
}

// Unbiased bounded draw via rejection sampling.
inline std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// int in [lo, hi] inclusive.
inline int bounded_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(bounded_u64(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// uniform double in [0, 1).
inline double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void fisher_yates(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_u64(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace taes
