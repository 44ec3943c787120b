#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fdsim/rng.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

// Application-level consumer of one or more flows. Resides on exactly one
// core; emits tx_per_delivery outgoing packets per delivered packet.
struct AppThread {
  std::uint32_t id = 0;
  CoreId current_core = 0;
  std::vector<std::uint32_t> flow_ids;
  std::uint32_t tx_per_delivery = 1;
};

enum class SchedulerPolicy : std::uint8_t { Pinned, PeriodicRandom, LoadBalance };

const char* to_string(SchedulerPolicy p);

struct MigrationRecord {
  SimTime time = 0.0;
  std::uint32_t thread_id = 0;
  CoreId from = 0;
  CoreId to = 0;
};

// OS scheduler model. Pinned never migrates. PeriodicRandom migrates each
// thread with probability migrate_prob to a uniformly random other core.
// LoadBalance moves threads off the most-populated core onto the least-
// populated one until resident counts differ by at most one.
class Scheduler {
 public:
  Scheduler(SchedulerPolicy policy, SimTime interval, double migrate_prob,
            std::uint32_t num_cores)
      : policy_(policy),
        interval_(interval),
        migrate_prob_(migrate_prob),
        num_cores_(num_cores) {}

  // Moves one thread; throws InvalidCore if the target is outside the
  // scenario. The flow-director table is untouched here: steering changes
  // only when the thread's next sampled TX packet goes out from the new
  // core.
  void migrate(AppThread& thread, CoreId to, SimTime now);

  // One migration decision round; returns the migrations performed.
  std::vector<MigrationRecord> tick(std::span<AppThread> threads, SimTime now,
                                    RngStream& rng);

  SchedulerPolicy policy() const { return policy_; }
  SimTime interval() const { return interval_; }
  std::uint32_t num_cores() const { return num_cores_; }
  const std::vector<MigrationRecord>& migrations() const { return migrations_; }

 private:
  SchedulerPolicy policy_;
  SimTime interval_;
  double migrate_prob_;
  std::uint32_t num_cores_;
  std::vector<MigrationRecord> migrations_;
};

}  // namespace fdsim
