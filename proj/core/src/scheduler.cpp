#include "fdsim/scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "fdsim/errors.hpp"

namespace fdsim {

const char* to_string(SchedulerPolicy p) {
  switch (p) {
    case SchedulerPolicy::Pinned: return "pinned";
    case SchedulerPolicy::PeriodicRandom: return "periodic_random";
    case SchedulerPolicy::LoadBalance: return "load_balance";
  }
  return "unknown";
}

void Scheduler::migrate(AppThread& thread, CoreId to, SimTime now) {
  if (to >= num_cores_) {
    throw InvalidCore("migration target core " + std::to_string(to) +
                      " outside scenario (cores=" + std::to_string(num_cores_) + ")");
  }
  migrations_.push_back(MigrationRecord{now, thread.id, thread.current_core, to});
  thread.current_core = to;
}

std::vector<MigrationRecord> Scheduler::tick(std::span<AppThread> threads, SimTime now,
                                             RngStream& rng) {
  std::size_t before = migrations_.size();

  switch (policy_) {
    case SchedulerPolicy::Pinned:
      break;

    case SchedulerPolicy::PeriodicRandom: {
      if (num_cores_ < 2) break;
      for (AppThread& t : threads) {
        if (rng.uniform() >= migrate_prob_) continue;
        // Uniform over the other cores: draw in [0, cores-1) and skip self.
        CoreId target = rng.pick(num_cores_ - 1);
        if (target >= t.current_core) ++target;
        migrate(t, target, now);
      }
      break;
    }

    case SchedulerPolicy::LoadBalance: {
      // Resident thread ids per core, kept sorted so the choice of which
      // thread moves is deterministic (lowest id first).
      std::vector<std::vector<std::uint32_t>> residents(num_cores_);
      for (const AppThread& t : threads) residents[t.current_core].push_back(t.id);
      for (auto& r : residents) std::sort(r.begin(), r.end());

      for (;;) {
        std::size_t max_core = 0, min_core = 0;
        for (std::size_t c = 1; c < residents.size(); ++c) {
          if (residents[c].size() > residents[max_core].size()) max_core = c;
          if (residents[c].size() < residents[min_core].size()) min_core = c;
        }
        if (residents[max_core].size() - residents[min_core].size() <= 1) break;

        std::uint32_t tid = residents[max_core].front();
        assert(tid < threads.size() && threads[tid].id == tid);
        residents[max_core].erase(residents[max_core].begin());
        residents[min_core].insert(
            std::lower_bound(residents[min_core].begin(), residents[min_core].end(), tid),
            tid);
        migrate(threads[tid], static_cast<CoreId>(min_core), now);
      }
      break;
    }
  }

  return {migrations_.begin() + static_cast<std::ptrdiff_t>(before), migrations_.end()};
}

}  // namespace fdsim
