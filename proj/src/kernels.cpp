#include "shatter/kernels.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "shatter/family.hpp"

namespace shatter::kernels {

bool use_parallel(Exec exec, std::uint64_t work) {
  switch (exec) {
    case Exec::Serial: return false;
    case Exec::Parallel: return true;
    case Exec::Auto: break;
  }
#ifdef _OPENMP
  if (omp_in_parallel()) return false;
  return work >= (std::uint64_t{1} << kParallelMinGround) && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}

namespace {

// Distinct-trace counter with epoch stamps so the scratch is never cleared.
class TraceCounter {
 public:
  explicit TraceCounter(std::size_t capacity) : stamps_(capacity, 0) {}

  bool shatters(std::span<const Subset> members, std::uint32_t s) {
    const std::uint32_t need = 1u << std::popcount(s);
    if (++epoch_ == 0) {
      std::fill(stamps_.begin(), stamps_.end(), 0);
      epoch_ = 1;
    }
    std::uint32_t distinct = 0;
    for (Subset f : members) {
      auto& slot = stamps_[compress_bits(f.bits(), s)];
      if (slot != epoch_) {
        slot = epoch_;
        if (++distinct == need) return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::uint32_t> stamps_;
  std::uint32_t epoch_ = 0;
};

bool subsets_all_shattered(const std::vector<std::uint8_t>& sh, std::uint32_t x) {
  for (std::uint32_t b = x; b != 0; b &= b - 1)
    if (!sh[x & ~(b & (~b + 1u))]) return false;
  return true;
}

}  // namespace

std::vector<std::uint8_t> shattered_indicator_serial(const SetFamily& fam) {
  const std::uint64_t size = fam.ground().universe_size();
  std::vector<std::uint8_t> sh(size, 0);
  if (fam.empty()) return sh;
  const auto members = fam.members();
  TraceCounter counter(members.size());
  for (std::uint64_t v = 0; v < size; ++v) {
    const auto x = static_cast<std::uint32_t>(v);
    if ((std::uint64_t{1} << std::popcount(x)) > members.size()) continue;
    if (!subsets_all_shattered(sh, x)) continue;
    sh[x] = counter.shatters(members, x);
  }
  return sh;
}

std::vector<std::uint8_t> shattered_indicator_parallel(const SetFamily& fam) {
  const std::uint64_t size = fam.ground().universe_size();
  std::vector<std::uint8_t> sh(size, 0);
  if (fam.empty()) return sh;
  const auto members = fam.members();
  const auto total = static_cast<std::int64_t>(size);
  for (int level = 0; level <= fam.ground().n(); ++level) {
    if ((std::uint64_t{1} << level) > members.size()) break;
    bool any = false;
#pragma omp parallel reduction(|| : any)
    {
      TraceCounter counter(members.size());
#pragma omp for schedule(dynamic, 1024)
      for (std::int64_t v = 0; v < total; ++v) {
        const auto x = static_cast<std::uint32_t>(v);
        if (std::popcount(x) != level) continue;
        if (!subsets_all_shattered(sh, x)) continue;
        if (counter.shatters(members, x)) {
          sh[x] = 1;
          any = true;
        }
      }
    }
    // Sh is a down-set: an empty level ends the search
    if (!any) break;
  }
  return sh;
}

std::vector<std::uint8_t> shattered_indicator(const SetFamily& fam, Exec exec) {
  const std::uint64_t work = fam.ground().universe_size() * std::max<std::uint64_t>(1, fam.size() / 64);
  return use_parallel(exec, work) ? shattered_indicator_parallel(fam) : shattered_indicator_serial(fam);
}

std::vector<std::uint8_t> cube_union_indicator_serial(GroundSet ground, std::span<const CubeSpec> cubes) {
  std::vector<std::uint8_t> ind(ground.universe_size(), 0);
  const Subset full = ground.full();
  for (const CubeSpec& c : cubes) {
    for_each_subset(full - c.support, [&](Subset free) { ind[(c.pattern | free).bits()] = 1; });
  }
  return ind;
}

std::vector<std::uint8_t> cube_union_indicator_parallel(GroundSet ground, std::span<const CubeSpec> cubes) {
  std::vector<std::uint8_t> ind(ground.universe_size(), 0);
  const auto total = static_cast<std::int64_t>(ground.universe_size());
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < total; ++v) {
    const auto x = static_cast<std::uint32_t>(v);
    for (const CubeSpec& c : cubes) {
      if ((x & c.support.bits()) == c.pattern.bits()) {
        ind[x] = 1;
        break;
      }
    }
  }
  return ind;
}

std::vector<std::uint8_t> cube_union_indicator(GroundSet ground, std::span<const CubeSpec> cubes, Exec exec) {
  const std::uint64_t work = ground.universe_size() * std::max<std::size_t>(1, cubes.size());
  return use_parallel(exec, work) ? cube_union_indicator_parallel(ground, cubes)
                                  : cube_union_indicator_serial(ground, cubes);
}

std::int64_t IeTerms::total() const { return std::accumulate(by_size.begin(), by_size.end(), std::int64_t{0}); }

namespace {

// Walks the reflected Gray code g = lo..hi-1, I = g ^ (g >> 1), keeping |S_I|
// through per-element counts and the number of incompatible pairs inside I.
class GrayWalker {
 public:
  GrayWalker(GroundSet ground, std::span<const Subset> supports, std::span<const std::uint32_t> incompatible)
      : n_(ground.n()), supports_(supports), incompatible_(incompatible), element_count_(ground.n(), 0) {}

  void accumulate(std::uint64_t lo, std::uint64_t hi, std::vector<std::int64_t>& by_size) {
    if (lo >= hi) return;
    reset(lo ^ (lo >> 1));
    record(by_size);
    for (std::uint64_t g = lo + 1; g < hi; ++g) {
      toggle(std::countr_zero(g));
      record(by_size);
    }
  }

 private:
  void reset(std::uint64_t set) {
    members_ = 0;
    union_size_ = 0;
    bad_pairs_ = 0;
    std::fill(element_count_.begin(), element_count_.end(), 0);
    for (std::uint64_t b = set; b != 0; b &= b - 1) toggle(std::countr_zero(b));
  }

  void toggle(int i) {
    const std::uint32_t bit = 1u << i;
    const std::uint32_t s = supports_[i].bits();
    if (members_ & bit) {
      members_ ^= bit;
      bad_pairs_ -= std::popcount(incompatible_[i] & members_);
      for (std::uint32_t b = s; b != 0; b &= b - 1)
        if (--element_count_[std::countr_zero(b)] == 0) --union_size_;
    } else {
      bad_pairs_ += std::popcount(incompatible_[i] & members_);
      members_ |= bit;
      for (std::uint32_t b = s; b != 0; b &= b - 1)
        if (element_count_[std::countr_zero(b)]++ == 0) ++union_size_;
    }
  }

  void record(std::vector<std::int64_t>& by_size) const {
    if (bad_pairs_ == 0) return;  // 1 - prod I_ij = 0
    const int k = std::popcount(members_);
    const std::int64_t magnitude = std::int64_t{1} << (n_ - union_size_);
    by_size[k] += (k % 2 == 1) ? magnitude : -magnitude;
  }

  int n_;
  std::span<const Subset> supports_;
  std::span<const std::uint32_t> incompatible_;
  std::vector<int> element_count_;
  std::uint32_t members_ = 0;
  int union_size_ = 0;
  int bad_pairs_ = 0;
};

}  // namespace

IeTerms ie_terms_serial(GroundSet ground, std::span<const Subset> supports, std::span<const std::uint32_t> incompatible) {
  IeTerms out{std::vector<std::int64_t>(supports.size() + 1, 0)};
  GrayWalker(ground, supports, incompatible).accumulate(0, std::uint64_t{1} << supports.size(), out.by_size);
  return out;
}

IeTerms ie_terms_parallel(GroundSet ground, std::span<const Subset> supports,
                          std::span<const std::uint32_t> incompatible) {
  const std::size_t width = supports.size() + 1;
  IeTerms out{std::vector<std::int64_t>(width, 0)};
  const std::uint64_t total = std::uint64_t{1} << supports.size();
  const std::int64_t chunks = static_cast<std::int64_t>(std::min<std::uint64_t>(total, 256));
  const std::uint64_t step = (total + chunks - 1) / chunks;
#pragma omp parallel
  {
    std::vector<std::int64_t> local(width, 0);
    GrayWalker walker(ground, supports, incompatible);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = static_cast<std::uint64_t>(c) * step;
      walker.accumulate(lo, std::min(total, lo + step), local);
    }
#pragma omp critical
    for (std::size_t k = 0; k < width; ++k) out.by_size[k] += local[k];
  }
  return out;
}

IeTerms ie_terms(GroundSet ground, std::span<const Subset> supports, std::span<const std::uint32_t> incompatible,
                 Exec exec) {
  const std::uint64_t work = (std::uint64_t{1} << supports.size()) * static_cast<std::uint64_t>(ground.n() + 1);
  return use_parallel(exec, work) ? ie_terms_parallel(ground, supports, incompatible)
                                  : ie_terms_serial(ground, supports, incompatible);
}

}  // namespace shatter::kernels
