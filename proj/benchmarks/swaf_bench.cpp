// Microbenchmarks for the per-evaluation hot paths.

#include <benchmark/benchmark.h>

#include <vector>

#include "swaf/catalog.hpp"
#include "swaf/deployer.hpp"
#include "swaf/engine.hpp"
#include "swaf/formulation.hpp"
#include "swaf/rng.hpp"
#include "swaf/rules.hpp"

namespace {

using namespace swaf;

std::vector<KnowledgePoint> random_pool(std::size_t n, std::size_t dim, RngStream& rng) {
  std::vector<KnowledgePoint> pool(n);
  for (auto& p : pool) {
    p.x.resize(dim);
    for (auto& v : p.x) v = rng.uniform_real() * 10.0 - 5.0;
  }
  return pool;
}

void BM_PbhMap(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  RngStream rng(1);
  std::vector<Bounds> box(dim, Bounds{-1.0, 1.0});
  Vector x(dim);
  for (auto& v : x) v = rng.uniform_real() * 20.0 - 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbh_map(x, box));
  }
}
BENCHMARK(BM_PbhMap)->Arg(2)->Arg(13)->Arg(100);

void BM_PsGenerate(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  RngStream rng(2);
  const auto pool = random_pool(3, dim, rng);
  const PsMemory mem{pool[0].x, pool[1].x, pool[2]};
  const PsParams params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps_generate(mem, pool[0], params, rng));
  }
}
BENCHMARK(BM_PsGenerate)->Arg(2)->Arg(13)->Arg(100);

void BM_DeGenerate(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  RngStream rng(3);
  const auto pool = random_pool(70, dim, rng);
  const DeParams params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(de_generate(pool[1], pool[0], pool, params, rng));
  }
}
BENCHMARK(BM_DeGenerate)->Arg(2)->Arg(13)->Arg(100);

void BM_SwarmStepG1(benchmark::State& state) {
  SwarmConfig cfg;
  cfg.n_agents = static_cast<std::size_t>(state.range(0));
  cfg.max_cycles = 1'000'000;
  cfg.seed = 4;
  Swarm swarm(make_catalog_problem("G1"), cfg);
  for (auto _ : state) {
    swarm.step();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SwarmStepG1)->Arg(10)->Arg(70);

void BM_DeployerFire(benchmark::State& state) {
  RngStream rng(5);
  DeployerNetwork net(DeployerParams{}, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(net.fire(rng));
  }
}
BENCHMARK(BM_DeployerFire);

}  // namespace

BENCHMARK_MAIN();
