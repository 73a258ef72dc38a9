#pragma once

#include <span>
#include <vector>

#include "shatter/family.hpp"

namespace shatter {

// { F subset of [n] : F & support == pattern }, a subcube of dimension n - |support|.
// P_S is Cube{g, S, S}.
struct Cube {
  GroundSet ground;
  Subset support;
  Subset pattern;

  bool contains(Subset f) const { return (f & support) == pattern; }
  int dimension() const { return ground.n() - support.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << dimension(); }

  bool operator==(const Cube&) const = default;
};

Cube p_cube(GroundSet ground, Subset s);
// Throws PatternNotInSupport unless h is a subset of s.
Cube q_cube(GroundSet ground, Subset s, Subset h);
SetFamily cube_members(const Cube& c);

struct SpernerMember {
  Subset support;  // S_i
  Subset pattern;  // H_i = h(S_i)

  bool operator==(const SpernerMember&) const = default;
};

// An antichain S_1..S_N with an assignment H_i subset of S_i, members ascending by S_i.
class SpernerSystem {
 public:
  SpernerSystem() = default;
  explicit SpernerSystem(GroundSet ground) : ground_(ground) {}
  // Sorts by support and validates: members valid, supports an antichain
  // (NotAntichain), patterns inside supports (PatternNotInSupport).
  SpernerSystem(GroundSet ground, std::vector<SpernerMember> members);

  GroundSet ground() const { return ground_; }
  std::span<const SpernerMember> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const SpernerMember& operator[](std::size_t i) const { return members_[i]; }

  std::vector<Subset> supports() const;
  std::vector<Cube> q_cubes() const;
  Cube q_cube_at(std::size_t i) const { return Cube{ground_, members_[i].support, members_[i].pattern}; }

  bool operator==(const SpernerSystem&) const = default;

 private:
  GroundSet ground_;
  std::vector<SpernerMember> members_;
};

// Throws NotAntichain when some pair is comparable (or repeated).
void require_antichain(std::span<const Subset> sets);

// Up(S), the union of the P-cubes.
SetFamily up_set_of(const SpernerSystem& sys);
SetFamily up_set_of(GroundSet ground, std::span<const Subset> antichain);
// H(S) = 2^[n] \ Up(S).
SetFamily h_complement(const SpernerSystem& sys);
SetFamily h_complement(GroundSet ground, std::span<const Subset> antichain);
// F(S,h) = 2^[n] \ union of Q_{S_i,H_i}.
SetFamily build_f(const SpernerSystem& sys);

// h_A(S) = S & a.
SpernerSystem h_from_anchor(GroundSet ground, std::span<const Subset> antichain, Subset anchor);

// 2^s \ trace(fam, s)
SetFamily missing_intersections(const SetFamily& fam, Subset s);

// The unique (S,h) with build_f = fam and H(S) = Sh(fam): S are the minimal
// non-shattered sets and h picks the single missing trace on each.
SpernerSystem canonical_decomposition(const SetFamily& fam);

}  // namespace shatter
