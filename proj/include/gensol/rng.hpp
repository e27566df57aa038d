#pragma once

#include <cstdint>
#include <random>

namespace gensol {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for task `task` under run seed `seed`, so that work split
/// across threads draws the same numbers as a serial run.
inline std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t task) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(task + 0x5851f42d4c957f2dULL)));
}

}  // namespace gensol
