#include <benchmark/benchmark.h>

#include <cstdint>

#include "refnet/detect.hpp"
#include "refnet/digraph.hpp"
#include "refnet/network.hpp"
#include "refnet/rng.hpp"

namespace {

using namespace refnet;

Network sparse_network(NodeId n, double c, std::uint32_t p_hi, std::uint32_t th_hi,
                       std::uint64_t seed) {
  Rng rng(seed);
  Digraph g = gen_erdos_renyi(n, std::min(c / n, 1.0), rng);
  return random_network(std::move(g), 1, p_hi, 1, th_hi, rng);
}

void bench_step(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const Network net = sparse_network(n, 1.5, 2, 2, 11);
  Rng rng(12);
  State cur = random_state(net, rng);
  State next(cur.size());
  for (auto _ : state) {
    step_into(net, cur, next);
    cur.swap(next);
    benchmark::DoNotOptimize(cur.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bench_step)->Arg(256)->Arg(4096)->Arg(65536);

void bench_detect_hashing(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const Network net = sparse_network(n, 1.5, 1, 1, 21);
  Rng rng(22);
  const State s0 = random_state(net, rng);
  std::uint64_t steps = 0;
  for (auto _ : state) {
    const DynamicsSummary sum = detect_hashing(net, s0);
    steps += sum.tau + sum.alpha.convert_to<std::uint64_t>();
    benchmark::DoNotOptimize(steps);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(steps));
}
BENCHMARK(bench_detect_hashing)->Arg(100)->Arg(400)->Arg(1600);

void bench_detect_decomposed(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  const Network net = sparse_network(n, 1.5, 1, 1, 21);
  Rng rng(22);
  const State s0 = random_state(net, rng);
  for (auto _ : state) {
    const DynamicsSummary sum = detect_decomposed(net, s0);
    benchmark::DoNotOptimize(sum.tau);
  }
}
BENCHMARK(bench_detect_decomposed)->Arg(100)->Arg(400)->Arg(1600);

void bench_gen_sparse(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  Rng rng(31);
  std::uint64_t arcs = 0;
  for (auto _ : state) {
    const Digraph g = gen_erdos_renyi(n, 1.5 / n, rng, ArcSampling::geometric_skip);
    arcs += g.arc_count();
    benchmark::DoNotOptimize(arcs);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(arcs));
}
BENCHMARK(bench_gen_sparse)->Arg(1000)->Arg(100000);

void bench_gen_per_pair(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  Rng rng(32);
  for (auto _ : state) {
    const Digraph g = gen_erdos_renyi(n, 1.5 / n, rng, ArcSampling::per_pair);
    benchmark::DoNotOptimize(g.arc_count());
  }
  state.SetItemsProcessed(state.iterations() * n * (n - 1));
}
BENCHMARK(bench_gen_per_pair)->Arg(1000);

void bench_condense(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  Rng rng(41);
  const Digraph g = gen_erdos_renyi(n, 1.5 / n, rng);
  for (auto _ : state) {
    const Condensation c = condense(g);
    benchmark::DoNotOptimize(c.component_of.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bench_condense)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
