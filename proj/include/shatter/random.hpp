#pragma once

#include <random>
#include <vector>

#include "shatter/family.hpp"
#include "shatter/sperner.hpp"

namespace shatter::sample {

using Rng = std::mt19937_64;

// Each subset of [n] included independently with probability 1/2.
SetFamily random_family(GroundSet ground, Rng& rng);

// Up to max_size distinct pairwise-incomparable sets; each candidate takes
// every element with probability 1/2. At least one member when max_size >= 1.
std::vector<Subset> random_antichain(GroundSet ground, std::size_t max_size, Rng& rng);

// Random subset of `s`, each element with probability 1/2.
Subset random_subset_of(Subset s, Rng& rng);

// Random antichain with a uniformly random assignment H_i subset of S_i.
SpernerSystem random_system(GroundSet ground, std::size_t max_members, Rng& rng);

// Rejection-samples random_system until |F(S,h)| == |H(S)|; gives up after
// max_attempts draws and returns the last h_A system instead, with flag false.
struct ExtremalDraw {
  SpernerSystem system;
  bool from_rejection = true;
};
ExtremalDraw random_extremal_system(GroundSet ground, std::size_t max_members, Rng& rng,
                                    std::size_t max_attempts = 10000);

}  // namespace shatter::sample
