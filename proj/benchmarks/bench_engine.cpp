#include <benchmark/benchmark.h>

#include "fdsim/engine.hpp"

using namespace fdsim;

static void ScheduleAndDrain(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Engine eng(1);
    auto& rng = eng.rng("bench");
    for (std::size_t i = 0; i < n; ++i) {
      eng.schedule(rng.uniform(), EventKind::PacketArrival);
    }
    while (eng.step()) {
    }
    benchmark::DoNotOptimize(eng.now());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(ScheduleAndDrain)->Range(1 << 10, 1 << 16);

static void SelfSchedulingChain(benchmark::State& state) {
  // The arrival-pattern hot path: each event schedules its successor.
  for (auto _ : state) {
    Engine eng(1);
    std::size_t remaining = 100000;
    std::function<void()> hop = [&] {
      if (--remaining > 0) {
        eng.schedule(eng.now() + 1e-5, EventKind::PacketArrival, hop);
      }
    };
    eng.schedule(0.0, EventKind::PacketArrival, hop);
    eng.run();
    benchmark::DoNotOptimize(remaining);
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(SelfSchedulingChain);

static void NamedStreamDraw(benchmark::State& state) {
  Engine eng(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.rng_next("arrivals"));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(NamedStreamDraw);
