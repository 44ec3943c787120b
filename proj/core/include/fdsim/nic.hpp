#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fdsim/fd_table.hpp"
#include "fdsim/packet.hpp"
#include "fdsim/ring_buffer.hpp"
#include "fdsim/rss.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

struct EnqueueOutcome {
  bool accepted = false;
  QueueId queue = 0;
  bool raised_interrupt = false;
};

// The receive side of the NIC: steering (flow-director table with RSS
// fallback), one ring buffer per queue, and edge-triggered interrupt
// signaling on empty-to-non-empty transitions.
class Nic {
 public:
  using InterruptFn = std::function<void(QueueId, SimTime)>;

  Nic(std::uint32_t num_queues, std::uint32_t ring_capacity, RssIndirection rss,
      FdTable fd, bool fd_enabled);

  // Queue choice for a receive flow: exact-match table entry if present
  // (and the table is enabled), otherwise hash plus indirection. Pure.
  QueueId steer(const FlowKey& flow) const;

  // Deposits the packet into the steered ring, or drops it if that ring
  // is full. Raises an interrupt to the owning core when the ring goes
  // from empty to non-empty.
  EnqueueOutcome enqueue_rx(Packet pkt, SimTime now);

  void set_on_interrupt(InterruptFn fn) { on_interrupt_ = std::move(fn); }

  RingBuffer& ring(QueueId q) { return rings_[q]; }
  const RingBuffer& ring(QueueId q) const { return rings_[q]; }
  std::uint32_t num_queues() const { return static_cast<std::uint32_t>(rings_.size()); }

  FdTable& fd_table() { return fd_; }
  const FdTable& fd_table() const { return fd_; }
  bool fd_enabled() const { return fd_enabled_; }
  const RssIndirection& rss() const { return rss_; }

  std::uint64_t total_drops() const;
  std::uint64_t interrupts_raised() const { return interrupts_raised_; }

 private:
  std::vector<RingBuffer> rings_;
  RssIndirection rss_;
  FdTable fd_;
  bool fd_enabled_;
  InterruptFn on_interrupt_;
  std::uint64_t interrupts_raised_ = 0;
};

}  // namespace fdsim
