#include "shatter/random.hpp"

#include <algorithm>

namespace shatter::sample {

SetFamily random_family(GroundSet ground, Rng& rng) {
  std::vector<Subset> members;
  std::uint64_t word = 0;
  for (std::uint64_t x = 0; x < ground.universe_size(); ++x) {
    if (x % 64 == 0) word = rng();
    if ((word >> (x % 64)) & 1u) members.emplace_back(static_cast<std::uint32_t>(x));
  }
  return SetFamily::from_members(ground, std::move(members));
}

Subset random_subset_of(Subset s, Rng& rng) { return Subset(static_cast<std::uint32_t>(rng())) & s; }

std::vector<Subset> random_antichain(GroundSet ground, std::size_t max_size, Rng& rng) {
  std::vector<Subset> out;
  if (max_size == 0) return out;
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  const std::size_t target = size_dist(rng);
  for (int attempt = 0; attempt < 64 && out.size() < target; ++attempt) {
    const Subset s = random_subset_of(ground.full(), rng);
    if (std::none_of(out.begin(), out.end(), [&](Subset t) { return t.comparable(s); })) out.push_back(s);
  }
  if (out.empty()) out.push_back(random_subset_of(ground.full(), rng));
  return out;
}

SpernerSystem random_system(GroundSet ground, std::size_t max_members, Rng& rng) {
  std::vector<SpernerMember> members;
  for (Subset s : random_antichain(ground, max_members, rng)) members.push_back({s, random_subset_of(s, rng)});
  return SpernerSystem(ground, std::move(members));
}

ExtremalDraw random_extremal_system(GroundSet ground, std::size_t max_members, Rng& rng,
                                    std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    SpernerSystem sys = random_system(ground, max_members, rng);
    if (build_f(sys).size() == h_complement(sys).size()) return {std::move(sys), true};
  }
  const auto supports = random_antichain(ground, max_members, rng);
  return {h_from_anchor(ground, supports, random_subset_of(ground.full(), rng)), false};
}

}  // namespace shatter::sample
