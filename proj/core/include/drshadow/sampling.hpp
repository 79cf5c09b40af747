#pragma once

#include <cstdint>
#include <random>

#include "drshadow/base_space.hpp"

namespace drshadow {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Random eventually periodic point: `head` followed by a random preperiod of
// at most max_prefix bits and a random cycle of 1..max_cycle bits.
CantorPoint random_cantor(Rng& rng, const std::string& head = "", std::uint64_t max_prefix = 10,
                          std::uint64_t max_cycle = 4);

// Random point of D. Naturals are drawn from {0, ..., 20}.
Point random_point(const BaseSpace& space, Rng& rng);

// Random point of the compactification; Infinity with probability ~1/16
// where the space has one.
Point random_compactified_point(const BaseSpace& space, Rng& rng);

// Random point of D inside a nonempty clopen set.
Point random_point_in(const BaseSpace& space, const ClopenSet& s, Rng& rng);

}  // namespace drshadow
