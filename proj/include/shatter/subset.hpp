#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "shatter/error.hpp"

namespace shatter {

inline constexpr int kMaxGround = 24;

// A subset of [n] stored as its characteristic vector: bit i-1 is set iff i is
// a member. Element numbering is 1-based at the API boundary only.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elements);
  static Subset of(const std::vector<int>& elements);
  static constexpr Subset singleton(int element) { return Subset(1u << (element - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool has(int element) const { return (bits_ >> (element - 1)) & 1u; }

  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool superset_of(Subset other) const { return other.subset_of(*this); }
  constexpr bool comparable(Subset other) const { return subset_of(other) || other.subset_of(*this); }

  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  // set difference
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const Subset&) const = default;

  // 1-based, ascending.
  std::vector<int> elements() const;
  // "{1,2}" / "{}"
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

class GroundSet {
 public:
  constexpr GroundSet() = default;
  explicit GroundSet(int n);

  constexpr int n() const { return n_; }
  constexpr Subset full() const { return Subset(n_ == 32 ? ~0u : ((1u << n_) - 1u)); }
  // number of subsets of [n]
  constexpr std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }
  constexpr bool valid(Subset s) const { return s.subset_of(full()); }
  void validate(Subset s) const;

  constexpr bool operator==(const GroundSet&) const = default;

 private:
  int n_ = 0;
};

inline void require_same_ground(GroundSet a, GroundSet b) {
  if (!(a == b)) {
    throw Error(Errc::GroundMismatch,
                "ground sets differ: n=" + std::to_string(a.n()) + " vs n=" + std::to_string(b.n()));
  }
}

// Packs the bits of `x` selected by `mask` into the low bits (software PEXT).
constexpr std::uint32_t compress_bits(std::uint32_t x, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint32_t low = mask & (~mask + 1u);
    if (x & low) out |= bit;
    mask ^= low;
  }
  return out;
}

// Calls fn(Subset) for every subset of `mask`, ascending in integer value.
template <typename Fn>
void for_each_subset(Subset mask, Fn&& fn) {
  const std::uint32_t m = mask.bits();
  std::uint32_t sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

}  // namespace shatter
