#include "fdsim/engine.hpp"

#include <string>

#include "fdsim/errors.hpp"

namespace fdsim {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::PacketArrival: return "packet_arrival";
    case EventKind::ServiceComplete: return "service_complete";
    case EventKind::MigrationTick: return "migration_tick";
    case EventKind::TxEmit: return "tx_emit";
    case EventKind::EndOfRun: return "end_of_run";
  }
  return "unknown";
}

EventHandle Engine::schedule(SimTime t, EventKind kind, std::function<void()> action) {
  if (t < now_) {
    throw SchedulingInPast("schedule(" + std::to_string(t) + ") behind clock " +
                           std::to_string(now_));
  }
  EventHandle id = next_id_++;
  heap_.push(HeapItem{t, id});
  live_.emplace(id, Event{t, id, kind, std::move(action)});
  return id;
}

bool Engine::cancel(EventHandle h) {
  // Lazy removal: the heap entry is skipped when it surfaces.
  return live_.erase(h) > 0;
}

std::optional<Event> Engine::step() {
  while (!heap_.empty()) {
    HeapItem top = heap_.top();
    heap_.pop();
    auto it = live_.find(top.id);
    if (it == live_.end()) continue;  // cancelled
    Event ev = std::move(it->second);
    live_.erase(it);
    now_ = ev.time;
    return ev;
  }
  return std::nullopt;
}

std::size_t Engine::run_until(SimTime t_end) {
  std::size_t processed = 0;
  while (!heap_.empty()) {
    // Skip cancelled entries without disturbing the clock.
    auto it = live_.find(heap_.top().id);
    if (it == live_.end()) {
      heap_.pop();
      continue;
    }
    if (it->second.time > t_end) break;
    Event ev = *step();
    ++processed;
    if (ev.action) ev.action();
  }
  return processed;
}

std::size_t Engine::run() {
  std::size_t processed = 0;
  while (auto ev = step()) {
    ++processed;
    if (ev->action) ev->action();
  }
  return processed;
}

}  // namespace fdsim
