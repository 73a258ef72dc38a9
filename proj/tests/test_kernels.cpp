#include <omp.h>

#include "doctest.h"
#include "oracles.hpp"
#include "shatter/cube_calculus.hpp"
#include "shatter/kernels.hpp"
#include "shatter/random.hpp"

using namespace shatter;

namespace {

std::vector<std::uint32_t> incompatibility(const SpernerSystem& sys) {
  std::vector<std::uint32_t> out(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j)
      if (!indicator(sys[i].support, sys[i].pattern, sys[j].support, sys[j].pattern)) out[i] |= 1u << j;
  return out;
}

struct Threads {
  explicit Threads(int k) : saved(omp_get_max_threads()) { omp_set_num_threads(k); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("shattered_indicator: serial, parallel and brute force agree") {
  Threads t(4);
  sample::Rng rng(11);
  for (int n = 0; n <= 13; ++n) {
    for (int trial = 0; trial < (n <= 6 ? 40 : 4); ++trial) {
      SetFamily fam;
      if (trial % 2) {
        fam = sample::random_family(GroundSet(n), rng);
      } else {
        const auto ac = sample::random_antichain(GroundSet(n), 5, rng);
        fam = build_f(h_from_anchor(GroundSet(n), ac, sample::random_subset_of(GroundSet(n).full(), rng)));
      }
      const auto serial = kernels::shattered_indicator_serial(fam);
      const auto parallel = kernels::shattered_indicator_parallel(fam);
      REQUIRE(serial == parallel);
      REQUIRE(kernels::shattered_indicator(fam) == serial);
      if (n <= 6) {
        const auto sh = oracle::shattered(oracle::masks(fam), n);
        std::vector<std::uint8_t> expect(std::size_t{1} << n, 0);
        for (auto s : sh) expect[s] = 1;
        REQUIRE(serial == expect);
      }
    }
  }
}

TEST_CASE("cube_union_indicator: serial, parallel and brute force agree") {
  Threads t(3);
  sample::Rng rng(12);
  for (int n = 1; n <= 14; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const SpernerSystem sys = sample::random_system(GroundSet(n), 6, rng);
      std::vector<kernels::CubeSpec> cubes;
      for (const auto& m : sys.members()) cubes.push_back({m.support, m.pattern});
      const auto serial = kernels::cube_union_indicator_serial(GroundSet(n), cubes);
      REQUIRE(serial == kernels::cube_union_indicator_parallel(GroundSet(n), cubes));
      REQUIRE(serial == kernels::cube_union_indicator(GroundSet(n), cubes));
      if (n <= 8) {
        const auto f = oracle::build_f(n, oracle::pairs(sys));
        std::vector<std::uint8_t> expect(std::size_t{1} << n, 1);
        for (auto x : f) expect[x] = 0;
        REQUIRE(serial == expect);
      }
    }
}

TEST_CASE("ie_terms: serial and parallel agree, total is brute-force union size") {
  Threads t(4);
  sample::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 9;
    const std::size_t max_members = trial < 270 ? 6 : 14;
    const SpernerSystem sys = sample::random_system(GroundSet(n), max_members, rng);
    const auto supports = sys.supports();
    const auto inc = incompatibility(sys);
    const auto serial = kernels::ie_terms_serial(sys.ground(), supports, inc);
    const auto parallel = kernels::ie_terms_parallel(sys.ground(), supports, inc);
    REQUIRE(serial.by_size == parallel.by_size);
    // sum over I of (-1)^{|I|+1} 2^{n-|S_I|} is |Up(S)|; the compatible part is |union of cubes|
    if (n <= 8 && sys.size() <= 6) {
      const std::int64_t up = (std::int64_t{1} << n) - std::int64_t(oracle::h_of(n, oracle::supports_of(oracle::pairs(sys))).size());
      const std::int64_t cubes = oracle::union_by_ie(n, oracle::pairs(sys));
      REQUIRE(serial.total() == up - cubes);
    }
  }
}

TEST_CASE("use_parallel thresholds") {
  CHECK_FALSE(kernels::use_parallel(kernels::Exec::Serial, 1u << 20));
  CHECK(kernels::use_parallel(kernels::Exec::Parallel, 1));
  Threads t(1);
  CHECK_FALSE(kernels::use_parallel(kernels::Exec::Auto, 1u << 20));
}
