#include <benchmark/benchmark.h>

#include <vector>

#include "ipdyn/dynamics.hpp"
#include "ipdyn/gammapoly.hpp"
#include "ipdyn/ipsets.hpp"
#include "ipdyn/pet.hpp"
#include "ipdyn/subshift.hpp"

using namespace ipdyn;

static void BM_ChaconLanguage(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto sys = SubstitutionSystem::build(chacon_rules(), len);
    benchmark::DoNotOptimize(sys.words().size());
  }
}
BENCHMARK(BM_ChaconLanguage)->Arg(64)->Arg(256)->Arg(1024);

static void BM_ReturnSet(benchmark::State& state) {
  const std::int64_t w = state.range(0);
  const auto sys = SubstitutionSystem::build(chacon_rules(), static_cast<std::size_t>(w + 4));
  const auto u = OpenSet::cylinder("0010");
  const auto v = OpenSet::cylinder("01");
  for (auto _ : state) benchmark::DoNotOptimize(return_set(sys, u, v, w).members.size());
}
BENCHMARK(BM_ReturnSet)->Arg(100)->Arg(400);

static void BM_PolyReturnSet(benchmark::State& state) {
  const std::int64_t w = 200;
  const auto sys = SubstitutionSystem::build(chacon_rules(), 4 * w + 8);
  const std::vector<OpenSet> vs{OpenSet::cylinder("0"), OpenSet::cylinder("1")};
  const std::vector<IntegralPolynomial> ps{parse_polynomial("n"), parse_polynomial("2n")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_return_set(sys, OpenSet::cylinder("0"), vs, ps, w).members.size());
  }
}
BENCHMARK(BM_PolyReturnSet);

static void BM_PetChain(benchmark::State& state) {
  const auto system = parse_system("T1^{n^3}; T1^{2n^3}; T1^{n^2}*T2^{n}; T2^{n^2}");
  for (auto _ : state) benchmark::DoNotOptimize(pet_chain(system).size());
}
BENCHMARK(BM_PetChain);

static void BM_HindmanAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hindman_all(n, 2, 2).colorings_checked);
}
BENCHMARK(BM_HindmanAll)->Arg(5)->Arg(12);
BENCHMARK_MAIN();
