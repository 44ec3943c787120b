#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "fdsim/rng.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

enum class EventKind : std::uint8_t {
  PacketArrival,
  ServiceComplete,
  MigrationTick,
  TxEmit,
  EndOfRun,
};

const char* to_string(EventKind k);

// Handle returned by schedule(); permits cancellation. Doubles as the
// tie-break key: events with equal timestamps fire in scheduling order.
using EventHandle = std::uint64_t;

struct Event {
  SimTime time = 0.0;
  EventHandle id = 0;
  EventKind kind = EventKind::EndOfRun;
  std::function<void()> action;
};

// Deterministic discrete-event engine: time-ordered queue, simulation
// clock, and seeded named random streams. Identical (schedule sequence,
// seed) pairs replay bit-identically.
class Engine {
 public:
  explicit Engine(std::uint64_t seed = 0) : rng_(seed) {}

  SimTime now() const { return now_; }
  std::uint64_t seed() const { return rng_.seed(); }

  std::size_t pending() const { return live_.size(); }
  bool exhausted() const { return live_.empty(); }

  // Throws SchedulingInPast if t is behind the clock. Equal-to-clock is
  // allowed (immediate events).
  EventHandle schedule(SimTime t, EventKind kind, std::function<void()> action = {});

  // Removes a pending event; returns false if it already fired, was
  // cancelled, or never existed.
  bool cancel(EventHandle h);

  // Removes and returns the earliest pending event (ties broken by
  // scheduling order), advancing the clock to its time. Does not invoke
  // the action. Empty when the queue is exhausted; the clock then stays put.
  std::optional<Event> step();

  // Processes (pops and invokes) every event with time <= t_end, in order.
  // Returns the number processed. The clock ends at the last processed
  // event's time, not at t_end.
  std::size_t run_until(SimTime t_end);

  // Processes events until the queue is exhausted.
  std::size_t run();

  // Named random stream; see RngSet.
  RngStream& rng(std::string_view label) { return rng_.stream(label); }

  // Uniform draw in [0,1) from the named stream.
  double rng_next(std::string_view label) { return rng(label).uniform(); }

 private:
  struct HeapItem {
    SimTime time;
    EventHandle id;
    bool operator>(const HeapItem& o) const {
      if (time != o.time) return time > o.time;
      return id > o.id;
    }
  };

  SimTime now_ = 0.0;
  EventHandle next_id_ = 1;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap_;
  std::unordered_map<EventHandle, Event> live_;
  RngSet rng_;
};

}  // namespace fdsim
