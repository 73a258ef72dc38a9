#include "shatter/family.hpp"

#include <algorithm>
#include <iterator>

#include "shatter/kernels.hpp"

namespace shatter {

SetFamily SetFamily::from_members(GroundSet ground, std::vector<Subset> members) {
  for (Subset s : members) ground.validate(s);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SetFamily fam(ground);
  fam.members_ = std::move(members);
  return fam;
}

SetFamily SetFamily::from_members_strict(GroundSet ground, std::vector<Subset> members) {
  for (Subset s : members) ground.validate(s);
  std::sort(members.begin(), members.end());
  auto dup = std::adjacent_find(members.begin(), members.end());
  if (dup != members.end()) throw Error(Errc::InvalidArgument, "duplicate set " + dup->to_string());
  SetFamily fam(ground);
  fam.members_ = std::move(members);
  return fam;
}

SetFamily SetFamily::full(GroundSet ground) {
  SetFamily fam(ground);
  fam.members_.reserve(ground.universe_size());
  for (std::uint64_t x = 0; x < ground.universe_size(); ++x) fam.members_.emplace_back(static_cast<std::uint32_t>(x));
  return fam;
}

SetFamily SetFamily::from_indicator(GroundSet ground, std::span<const std::uint8_t> indicator) {
  if (indicator.size() != ground.universe_size()) {
    throw Error(Errc::InvalidArgument, "indicator length does not match 2^n");
  }
  SetFamily fam(ground);
  for (std::size_t x = 0; x < indicator.size(); ++x)
    if (indicator[x]) fam.members_.emplace_back(static_cast<std::uint32_t>(x));
  return fam;
}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::vector<std::uint8_t> SetFamily::indicator() const {
  std::vector<std::uint8_t> out(ground_.universe_size(), 0);
  for (Subset s : members_) out[s.bits()] = 1;
  return out;
}

SetFamily SetFamily::with(Subset s) const {
  ground_.validate(s);
  SetFamily out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), s);
  if (it == out.members_.end() || *it != s) out.members_.insert(it, s);
  return out;
}

SetFamily SetFamily::without(Subset s) const {
  SetFamily out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), s);
  if (it != out.members_.end() && *it == s) out.members_.erase(it);
  return out;
}

SetFamily trace(const SetFamily& fam, Subset s) {
  fam.ground().validate(s);
  std::vector<Subset> out;
  out.reserve(fam.size());
  for (Subset f : fam) out.push_back(f & s);
  return SetFamily::from_members(fam.ground(), std::move(out));
}

bool is_shattered(const SetFamily& fam, Subset s) {
  fam.ground().validate(s);
  const std::uint64_t need = std::uint64_t{1} << s.size();
  if (fam.size() < need) return false;
  std::vector<std::uint8_t> seen(need, 0);
  std::uint64_t distinct = 0;
  for (Subset f : fam) {
    auto& slot = seen[compress_bits(f.bits(), s.bits())];
    if (!slot) {
      slot = 1;
      if (++distinct == need) return true;
    }
  }
  return false;
}

SetFamily shattered_sets(const SetFamily& fam) {
  return SetFamily::from_indicator(fam.ground(), kernels::shattered_indicator(fam));
}

std::optional<int> vc_dimension(const SetFamily& fam) {
  if (fam.empty()) return std::nullopt;
  int best = 0;
  for (Subset s : shattered_sets(fam)) best = std::max(best, s.size());
  return best;
}

bool is_s_extremal(const SetFamily& fam) {
  return shattered_sets(fam).size() == fam.size();
}

bool is_down_set(const SetFamily& fam) {
  for (Subset f : fam)
    for (std::uint32_t b = f.bits(); b != 0; b &= b - 1)
      if (!fam.contains(Subset(f.bits() & ~(b & (~b + 1u))))) return false;
  return true;
}

bool is_up_set(const SetFamily& fam) {
  const Subset full = fam.ground().full();
  for (Subset f : fam)
    for (std::uint32_t b = (full - f).bits(); b != 0; b &= b - 1)
      if (!fam.contains(Subset(f.bits() | (b & (~b + 1u))))) return false;
  return true;
}

SetFamily complement_family(const SetFamily& fam) {
  auto ind = fam.indicator();
  for (auto& v : ind) v = !v;
  return SetFamily::from_indicator(fam.ground(), ind);
}

SetFamily set_union(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a.ground(), b.ground());
  std::vector<Subset> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SetFamily::from_members(a.ground(), std::move(out));
}

SetFamily set_intersection(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a.ground(), b.ground());
  std::vector<Subset> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SetFamily::from_members(a.ground(), std::move(out));
}

SetFamily set_difference(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a.ground(), b.ground());
  std::vector<Subset> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SetFamily::from_members(a.ground(), std::move(out));
}

bool is_subfamily(const SetFamily& a, const SetFamily& b) {
  return a.ground() == b.ground() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

// Pairwise scan is cheaper than a closure over 2^n for small families.
bool prefer_pairwise(const SetFamily& fam) {
  const double pairs = static_cast<double>(fam.size()) * static_cast<double>(fam.size());
  return pairs <= static_cast<double>(fam.ground().n() + 1) * static_cast<double>(fam.ground().universe_size());
}

// up[x] = 1 iff some member is a subset of x (down = superset) via subset-sum sweeps.
std::vector<std::uint8_t> closure(const SetFamily& fam, bool upward) {
  auto ind = fam.indicator();
  const std::uint32_t size = static_cast<std::uint32_t>(ind.size());
  for (int i = 0; i < fam.ground().n(); ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t x = 0; x < size; ++x) {
      if (!(x & bit)) continue;
      if (upward)
        ind[x] |= ind[x ^ bit];
      else
        ind[x ^ bit] |= ind[x];
    }
  }
  return ind;
}

}  // namespace

SetFamily minimal_elements(const SetFamily& fam) {
  std::vector<Subset> out;
  if (prefer_pairwise(fam)) {
    // a proper subset has a smaller mask, so only earlier members can be below f
    const auto members = fam.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < i && minimal; ++j) minimal = !members[j].subset_of(members[i]);
      if (minimal) out.push_back(members[i]);
    }
  } else {
    const auto up = closure(fam, true);
    for (Subset f : fam) {
      bool minimal = true;
      for (std::uint32_t b = f.bits(); b != 0 && minimal; b &= b - 1) minimal = !up[f.bits() & ~(b & (~b + 1u))];
      if (minimal) out.push_back(f);
    }
  }
  return SetFamily::from_members(fam.ground(), std::move(out));
}

SetFamily maximal_elements(const SetFamily& fam) {
  std::vector<Subset> out;
  if (prefer_pairwise(fam)) {
    const auto members = fam.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j < members.size() && maximal; ++j) maximal = !members[i].subset_of(members[j]);
      if (maximal) out.push_back(members[i]);
    }
  } else {
    const auto down = closure(fam, false);
    const Subset full = fam.ground().full();
    for (Subset f : fam) {
      bool maximal = true;
      for (std::uint32_t b = (full - f).bits(); b != 0 && maximal; b &= b - 1)
        maximal = !down[f.bits() | (b & (~b + 1u))];
      if (maximal) out.push_back(f);
    }
  }
  return SetFamily::from_members(fam.ground(), std::move(out));
}

bool is_antichain(std::span<const Subset> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].comparable(sets[j])) return false;
  return true;
}

std::string to_string(const SetFamily& fam) {
  std::string out = "{";
  bool first = true;
  for (Subset s : fam) {
    if (!first) out += ',';
    out += s.to_string();
    first = false;
  }
  return out + "}";
}

}  // namespace shatter
