#pragma once

#include <cstdint>
#include <deque>
#include <optional>

#include "fdsim/packet.hpp"

namespace fdsim {

// Bounded FIFO of packet descriptors between a receive queue and its core.
class RingBuffer {
 public:
  explicit RingBuffer(std::uint32_t capacity) : capacity_(capacity) {}

  // False means the ring was full; the packet is dropped and counted.
  bool push(Packet p) {
    if (fifo_.size() >= capacity_) {
      ++drop_count_;
      return false;
    }
    fifo_.push_back(std::move(p));
    return true;
  }

  std::optional<Packet> pop() {
    if (fifo_.empty()) return std::nullopt;
    Packet p = std::move(fifo_.front());
    fifo_.pop_front();
    return p;
  }

  std::uint32_t capacity() const { return capacity_; }
  std::size_t size() const { return fifo_.size(); }
  bool empty() const { return fifo_.empty(); }
  std::uint64_t drop_count() const { return drop_count_; }

 private:
  std::uint32_t capacity_;
  std::deque<Packet> fifo_;
  std::uint64_t drop_count_ = 0;
};

}  // namespace fdsim
