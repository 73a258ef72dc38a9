// Serial reference kernels against their OpenMP variants.

#include <benchmark/benchmark.h>

#include "shatter/cube_calculus.hpp"
#include "shatter/elimination.hpp"
#include "shatter/kernels.hpp"
#include "shatter/random.hpp"

using namespace shatter;

namespace {

SetFamily anchored_family(int n, std::uint64_t seed) {
  sample::Rng rng(seed);
  const GroundSet g(n);
  const auto ac = sample::random_antichain(g, 8, rng);
  return build_f(h_from_anchor(g, ac, sample::random_subset_of(g.full(), rng)));
}

SetFamily half_family(int n, std::uint64_t seed) {
  sample::Rng rng(seed);
  return sample::random_family(GroundSet(n), rng);
}

std::vector<kernels::CubeSpec> cubes(int n, std::size_t count, std::uint64_t seed) {
  sample::Rng rng(seed);
  std::vector<kernels::CubeSpec> out;
  const auto sys = sample::random_system(GroundSet(n), count, rng);
  for (const auto& m : sys.members()) out.push_back({m.support, m.pattern});
  return out;
}

struct IeInput {
  GroundSet ground;
  std::vector<Subset> supports;
  std::vector<std::uint32_t> incompatible;
};

IeInput ie_input(std::size_t members, std::uint64_t seed) {
  sample::Rng rng(seed);
  const GroundSet g(20);
  SpernerSystem sys;
  do {
    sys = sample::random_system(g, members, rng);
  } while (sys.size() < members);
  std::vector<std::uint32_t> inc(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < sys.size(); ++j)
      if (!indicator(sys[i].support, sys[i].pattern, sys[j].support, sys[j].pattern)) inc[i] |= 1u << j;
  return {g, sys.supports(), inc};
}

template <auto Kernel>
void BM_shattered_extremal(benchmark::State& state) {
  const auto fam = anchored_family(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fam));
  state.counters["members"] = static_cast<double>(fam.size());
}

template <auto Kernel>
void BM_shattered_random(benchmark::State& state) {
  const auto fam = half_family(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(fam));
}

template <auto Kernel>
void BM_cube_union(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cs = cubes(n, 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(GroundSet(n), cs));
}

template <auto Kernel>
void BM_ie_terms(benchmark::State& state) {
  const auto in = ie_input(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(in.ground, in.supports, in.incompatible));
}

template <auto Audit>
void BM_audit_exhaustive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Audit(static_cast<int>(state.range(0)), AuditMode::exhaustive()));
}

template <auto Audit>
void BM_audit_random(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Audit(static_cast<int>(state.range(0)), AuditMode::random(200, 7)));
}

}  // namespace

BENCHMARK(BM_shattered_extremal<kernels::shattered_indicator_serial>)->Name("shattered/extremal/serial")->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shattered_extremal<kernels::shattered_indicator_parallel>)->Name("shattered/extremal/parallel")->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_shattered_random<kernels::shattered_indicator_serial>)->Name("shattered/random/serial")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shattered_random<kernels::shattered_indicator_parallel>)->Name("shattered/random/parallel")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cube_union<kernels::cube_union_indicator_serial>)->Name("cube_union/serial")->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cube_union<kernels::cube_union_indicator_parallel>)->Name("cube_union/parallel")->DenseRange(16, 22, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ie_terms<kernels::ie_terms_serial>)->Name("ie_terms/serial")->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ie_terms<kernels::ie_terms_parallel>)->Name("ie_terms/parallel")->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_audit_exhaustive<audit_conjecture_serial>)->Name("audit/exhaustive/serial")->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_exhaustive<audit_conjecture>)->Name("audit/exhaustive/parallel")->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_audit_random<audit_conjecture_serial>)->Name("audit/random/serial")->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_audit_random<audit_conjecture>)->Name("audit/random/parallel")->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
