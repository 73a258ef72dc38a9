#pragma once

// Subset-lattice kernels. Each kernel has a serial reference and an OpenMP
// variant; the two must agree bit for bit; the tests and the benchmark
// compare them directly.

#include <cstdint>
#include <span>
#include <vector>

#include "shatter/subset.hpp"

namespace shatter {
class SetFamily;
}

namespace shatter::kernels {

enum class Exec { Auto, Serial, Parallel };

// Indicator over 2^n of the shattered sets.
//
// Serial: candidates in ascending mask order, so every immediate subset is
// decided before its supersets; a candidate with a failed immediate subset is
// skipped (Sh is a down-set), otherwise its trace is counted exactly.
// Parallel: the same test, one popcount level at a time.
std::vector<std::uint8_t> shattered_indicator_serial(const SetFamily& fam);
std::vector<std::uint8_t> shattered_indicator_parallel(const SetFamily& fam);
std::vector<std::uint8_t> shattered_indicator(const SetFamily& fam, Exec exec = Exec::Auto);

struct CubeSpec {
  Subset support;
  Subset pattern;
};

// Indicator over 2^n of the union of the cubes { F : F & support = pattern }.
// Serial enumerates each cube's members; parallel tests every point of 2^n
// against every cube.
std::vector<std::uint8_t> cube_union_indicator_serial(GroundSet ground, std::span<const CubeSpec> cubes);
std::vector<std::uint8_t> cube_union_indicator_parallel(GroundSet ground, std::span<const CubeSpec> cubes);
std::vector<std::uint8_t> cube_union_indicator(GroundSet ground, std::span<const CubeSpec> cubes,
                                               Exec exec = Exec::Auto);

// Raw inclusion-exclusion terms sum_{I != {}} (-1)^{|I|+1} (1 - prod I_ij) 2^(n - |S_I|),
// bucketed by |I| (index 0 unused). incompatible[i] has bit j set iff the pair
// (i, j) has indicator 0.
struct IeTerms {
  std::vector<std::int64_t> by_size;
  std::int64_t total() const;
};

IeTerms ie_terms_serial(GroundSet ground, std::span<const Subset> supports,
                        std::span<const std::uint32_t> incompatible);
IeTerms ie_terms_parallel(GroundSet ground, std::span<const Subset> supports,
                          std::span<const std::uint32_t> incompatible);
IeTerms ie_terms(GroundSet ground, std::span<const Subset> supports,
                 std::span<const std::uint32_t> incompatible, Exec exec = Exec::Auto);

// Threshold (in 2^n) above which Auto picks the OpenMP variant, unless already
// inside a parallel region.
inline constexpr int kParallelMinGround = 12;
bool use_parallel(Exec exec, std::uint64_t work);

}  // namespace shatter::kernels
