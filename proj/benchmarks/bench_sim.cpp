#include <benchmark/benchmark.h>

#include "fdsim/metrics.hpp"
#include "fdsim/simulation.hpp"

using namespace fdsim;

static void EndToEndRun(benchmark::State& state) {
  Scenario s;
  s.cores = 8;
  s.ring_size = 512;
  s.service_rate_pps = 20000.0;
  s.scheduler.policy = SchedulerPolicy::PeriodicRandom;
  s.scheduler.interval_s = 0.02;
  s.scheduler.placement = Placement::RoundRobin;
  s.fd.sample_rate = 1;
  s.workload.n_flows = 64;
  s.workload.total_pps = 120000.0;
  s.workload.arrival = ArrivalKind::Poisson;
  s.workload.duration_s = 0.5;

  std::uint64_t delivered = 0;
  for (auto _ : state) {
    RunResult r = run_scenario(s, 1);
    delivered = r.stats.total_delivered();
    benchmark::DoNotOptimize(delivered);
  }
  // Roughly 3 engine events per delivered packet (arrival, completion, tx).
  state.SetItemsProcessed(state.iterations() * delivered);
  state.counters["delivered_per_run"] = static_cast<double>(delivered);
}
BENCHMARK(EndToEndRun)->Unit(benchmark::kMillisecond);

static void ReorderObserver(benchmark::State& state) {
  ReorderStats stats(1);
  std::uint64_t seq = 0;
  for (auto _ : state) {
    // Alternate a small displacement pattern to touch both branches.
    stats.observe_delivery(0, seq + 1);
    stats.observe_delivery(0, seq);
    stats.dupack_observe(0, seq + 1);
    stats.dupack_observe(0, seq);
    seq += 2;
  }
  state.SetItemsProcessed(state.iterations() * 2);
}
BENCHMARK(ReorderObserver);
