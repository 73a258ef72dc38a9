#include "shatter/sperner.hpp"

#include <algorithm>

#include "shatter/kernels.hpp"

namespace shatter {

Cube p_cube(GroundSet ground, Subset s) {
  ground.validate(s);
  return Cube{ground, s, s};
}

Cube q_cube(GroundSet ground, Subset s, Subset h) {
  ground.validate(s);
  if (!h.subset_of(s)) {
    throw Error(Errc::PatternNotInSupport, "pattern " + h.to_string() + " not inside support " + s.to_string());
  }
  return Cube{ground, s, h};
}

SetFamily cube_members(const Cube& c) {
  std::vector<Subset> out;
  out.reserve(c.size());
  for_each_subset(c.ground.full() - c.support, [&](Subset free) { out.push_back(c.pattern | free); });
  return SetFamily::from_members(c.ground, std::move(out));
}

void require_antichain(std::span<const Subset> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].comparable(sets[j])) {
        throw Error(Errc::NotAntichain, sets[i].to_string() + " and " + sets[j].to_string() + " are comparable");
      }
}

SpernerSystem::SpernerSystem(GroundSet ground, std::vector<SpernerMember> members)
    : ground_(ground), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const SpernerMember& a, const SpernerMember& b) { return a.support < b.support; });
  for (const auto& m : members_) {
    ground_.validate(m.support);
    if (!m.pattern.subset_of(m.support)) {
      throw Error(Errc::PatternNotInSupport,
                  "pattern " + m.pattern.to_string() + " not inside support " + m.support.to_string());
    }
  }
  require_antichain(supports());
}

std::vector<Subset> SpernerSystem::supports() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.support);
  return out;
}

std::vector<Cube> SpernerSystem::q_cubes() const {
  std::vector<Cube> out;
  out.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) out.push_back(q_cube_at(i));
  return out;
}

namespace {

SetFamily complement_of_union(GroundSet ground, const std::vector<kernels::CubeSpec>& cubes) {
  auto ind = kernels::cube_union_indicator(ground, cubes);
  for (auto& v : ind) v = !v;
  return SetFamily::from_indicator(ground, ind);
}

}  // namespace

SetFamily up_set_of(GroundSet ground, std::span<const Subset> antichain) {
  std::vector<kernels::CubeSpec> cubes;
  for (Subset s : antichain) {
    ground.validate(s);
    cubes.push_back({s, s});
  }
  return SetFamily::from_indicator(ground, kernels::cube_union_indicator(ground, cubes));
}

SetFamily up_set_of(const SpernerSystem& sys) {
  const auto s = sys.supports();
  return up_set_of(sys.ground(), s);
}

SetFamily h_complement(GroundSet ground, std::span<const Subset> antichain) {
  std::vector<kernels::CubeSpec> cubes;
  for (Subset s : antichain) {
    ground.validate(s);
    cubes.push_back({s, s});
  }
  return complement_of_union(ground, cubes);
}

SetFamily h_complement(const SpernerSystem& sys) {
  const auto s = sys.supports();
  return h_complement(sys.ground(), s);
}

SetFamily build_f(const SpernerSystem& sys) {
  std::vector<kernels::CubeSpec> cubes;
  for (const auto& m : sys.members()) cubes.push_back({m.support, m.pattern});
  return complement_of_union(sys.ground(), cubes);
}

SpernerSystem h_from_anchor(GroundSet ground, std::span<const Subset> antichain, Subset anchor) {
  ground.validate(anchor);
  require_antichain(antichain);
  std::vector<SpernerMember> members;
  for (Subset s : antichain) members.push_back({s, s & anchor});
  return SpernerSystem(ground, std::move(members));
}

SetFamily missing_intersections(const SetFamily& fam, Subset s) {
  fam.ground().validate(s);
  std::vector<std::uint8_t> seen(std::size_t{1} << s.size(), 0);
  for (Subset f : fam) seen[compress_bits(f.bits(), s.bits())] = 1;
  std::vector<Subset> out;
  for_each_subset(s, [&](Subset h) {
    if (!seen[compress_bits(h.bits(), s.bits())]) out.push_back(h);
  });
  return SetFamily::from_members(fam.ground(), std::move(out));
}

SpernerSystem canonical_decomposition(const SetFamily& fam) {
  const SetFamily sh = shattered_sets(fam);
  if (sh.size() != fam.size()) {
    throw Error(Errc::NotExtremal, "family shatters " + std::to_string(sh.size()) + " sets but has " +
                                       std::to_string(fam.size()) + " members");
  }
  if (fam.is_full()) throw Error(Errc::FullFamily, "2^[n] has no non-shattered set");
  std::vector<SpernerMember> members;
  for (Subset s : minimal_elements(complement_family(sh))) {
    const SetFamily missing = missing_intersections(fam, s);
    if (missing.size() != 1) {
      throw Error(Errc::AmbiguousMissing, "minimal non-shattered set " + s.to_string() + " misses " +
                                              std::to_string(missing.size()) + " traces");
    }
    members.push_back({s, missing.members()[0]});
  }
  return SpernerSystem(fam.ground(), std::move(members));
}

}  // namespace shatter
