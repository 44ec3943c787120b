#include "fdsim/nic.hpp"

#include <cassert>

#include "fdsim/toeplitz.hpp"

namespace fdsim {

Nic::Nic(std::uint32_t num_queues, std::uint32_t ring_capacity, RssIndirection rss,
         FdTable fd, bool fd_enabled)
    : rings_(num_queues, RingBuffer(ring_capacity)),
      rss_(std::move(rss)),
      fd_(std::move(fd)),
      fd_enabled_(fd_enabled) {}

QueueId Nic::steer(const FlowKey& flow) const {
  if (fd_enabled_) {
    if (auto core = fd_.lookup(flow)) return queue_of_core(*core);
  }
  return rss_.select(hash_5tuple(flow, rss_.hash_key));
}

EnqueueOutcome Nic::enqueue_rx(Packet pkt, SimTime now) {
  assert(pkt.direction == Direction::Rx);
  QueueId q = steer(pkt.flow);
  RingBuffer& ring = rings_[q];
  bool was_empty = ring.empty();

  pkt.queue = q;
  pkt.occupancy_at_enqueue = static_cast<std::uint32_t>(ring.size());
  if (!ring.push(std::move(pkt))) {
    return EnqueueOutcome{false, q, false};
  }

  bool raise = was_empty;
  if (raise) {
    ++interrupts_raised_;
    if (on_interrupt_) on_interrupt_(q, now);
  }
  return EnqueueOutcome{true, q, raise};
}

std::uint64_t Nic::total_drops() const {
  std::uint64_t total = 0;
  for (const auto& r : rings_) total += r.drop_count();
  return total;
}

}  // namespace fdsim
