#pragma once

#include <cstdint>

#include "fdsim/flow_key.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

enum class Direction : std::uint8_t { Rx, Tx };

struct Packet {
  FlowKey flow;
  std::uint32_t flow_id = 0;  // dense index assigned by the workload
  std::uint64_t seq = 0;      // strictly increasing per (flow, direction) at the source
  Direction direction = Direction::Rx;
  SimTime arrival_time = 0.0;
  SimTime delivery_time = -1.0;  // set when the stack finishes servicing it
  QueueId queue = 0;             // receive queue chosen by steering
  std::uint32_t occupancy_at_enqueue = 0;
};

}  // namespace fdsim
