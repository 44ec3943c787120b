#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fdsim/engine.hpp"
#include "fdsim/metrics.hpp"
#include "fdsim/nic.hpp"
#include "fdsim/scenario.hpp"
#include "fdsim/scheduler.hpp"
#include "fdsim/servicer.hpp"
#include "fdsim/workload.hpp"

namespace fdsim {

struct RunResult {
  std::uint64_t seed = 0;
  std::uint64_t arrivals = 0;
  std::uint64_t interrupts = 0;
  SimTime end_time = 0.0;
  ReorderStats stats{0};
  std::vector<DeliveryLogEntry> trace;
  std::vector<MigrationRecord> migrations;

  // Aggregate ratio with an empty run reported as zero (the stats object
  // itself throws NoData in that case).
  double reorder_ratio_or_zero() const {
    return stats.total_delivered() == 0 ? 0.0 : stats.reorder_ratio();
  }

  RunSummary summary(const Scenario& sc) const;
};

// One complete simulation instance: engine, NIC, per-core service loops,
// application threads, scheduler, traffic sources, and instrumentation.
// Single-threaded; deterministic per (scenario, seed).
class Simulation {
 public:
  Simulation(const Scenario& scenario, std::uint64_t seed, bool keep_trace = false);

  // Runs to completion: arrivals stop at the workload end, rings drain,
  // and the event queue empties.
  RunResult run();

  Engine& engine() { return engine_; }
  Nic& nic() { return *nic_; }
  std::span<AppThread> threads() { return threads_; }
  Scheduler& scheduler() { return *scheduler_; }
  ReorderStats& stats() { return stats_; }
  CoreServicer& servicer(CoreId c) { return *servicers_[c]; }

 private:
  void handle_arrival(std::uint32_t flow_id);
  void handle_delivery(const Packet& pkt, SimTime now);
  void handle_tx(std::uint32_t flow_id);
  void handle_migration_tick();

  Scenario scenario_;
  bool keep_trace_;
  Engine engine_;
  WorkloadSpec workload_;
  std::unique_ptr<Nic> nic_;
  std::vector<std::unique_ptr<CoreServicer>> servicers_;
  std::vector<AppThread> threads_;
  std::unique_ptr<Scheduler> scheduler_;
  ReorderStats stats_;
  std::vector<DeliveryLogEntry> trace_;
  std::vector<std::uint64_t> tx_seq_;
  std::uint64_t arrivals_ = 0;
  bool ran_ = false;
};

RunResult run_scenario(const Scenario& scenario, std::uint64_t seed,
                       bool keep_trace = false);

}  // namespace fdsim
