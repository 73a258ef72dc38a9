#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shatter/subset.hpp"

namespace shatter {

// Deduplicated set system over one ground set, members ascending by mask value.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(GroundSet ground) : ground_(ground) {}

  // Sorts and deduplicates; every member must be valid for `ground`.
  static SetFamily from_members(GroundSet ground, std::vector<Subset> members);
  // Rejects duplicates instead of merging them (used by the parsers).
  static SetFamily from_members_strict(GroundSet ground, std::vector<Subset> members);
  static SetFamily full(GroundSet ground);
  // indicator[x] != 0 marks Subset(x); indicator.size() must be 2^n.
  static SetFamily from_indicator(GroundSet ground, std::span<const std::uint8_t> indicator);

  GroundSet ground() const { return ground_; }
  std::span<const Subset> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Subset s) const;
  bool is_full() const { return members_.size() == ground_.universe_size(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::vector<std::uint8_t> indicator() const;

  SetFamily with(Subset s) const;
  SetFamily without(Subset s) const;

  bool operator==(const SetFamily&) const = default;

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

// { F & s : F in fam }
SetFamily trace(const SetFamily& fam, Subset s);
bool is_shattered(const SetFamily& fam, Subset s);
// Sh(fam); Sh of the empty family is empty.
SetFamily shattered_sets(const SetFamily& fam);
std::optional<int> vc_dimension(const SetFamily& fam);
bool is_s_extremal(const SetFamily& fam);

bool is_down_set(const SetFamily& fam);
bool is_up_set(const SetFamily& fam);

SetFamily complement_family(const SetFamily& fam);
SetFamily set_union(const SetFamily& a, const SetFamily& b);
SetFamily set_intersection(const SetFamily& a, const SetFamily& b);
SetFamily set_difference(const SetFamily& a, const SetFamily& b);
bool is_subfamily(const SetFamily& a, const SetFamily& b);

SetFamily minimal_elements(const SetFamily& fam);
SetFamily maximal_elements(const SetFamily& fam);

bool is_antichain(std::span<const Subset> sets);

std::string to_string(const SetFamily& fam);

}  // namespace shatter
