#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fdsim/rss.hpp"
#include "fdsim/toeplitz.hpp"

using namespace fdsim;

namespace {

std::vector<FlowKey> random_flows(std::size_t n) {
  std::mt19937_64 gen(1);
  std::vector<FlowKey> flows(n);
  for (auto& k : flows) {
    k.src_addr = static_cast<std::uint32_t>(gen());
    k.dst_addr = static_cast<std::uint32_t>(gen());
    k.protocol = 6;
    k.src_port = static_cast<std::uint16_t>(gen());
    k.dst_port = static_cast<std::uint16_t>(gen());
  }
  return flows;
}

}  // namespace

static void Hash5Tuple(benchmark::State& state) {
  auto flows = random_flows(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hash_5tuple(flows[i++ & 1023], kRssVerificationKey));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(Hash5Tuple);

static void SteerThroughIndirection(benchmark::State& state) {
  auto flows = random_flows(1024);
  auto ind = RssIndirection::make(128, 8);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ind.select(hash_5tuple(flows[i++ & 1023], ind.hash_key)));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(SteerThroughIndirection);
