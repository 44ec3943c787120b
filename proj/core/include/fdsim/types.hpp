#pragma once

#include <cstdint>

namespace fdsim {

// Simulation time in seconds. Continuous; the engine enforces monotonicity.
using SimTime = double;

using CoreId = std::uint32_t;
using QueueId = std::uint32_t;

// Receive queues and cores are paired one-to-one: queue i is owned by core i.
inline constexpr QueueId queue_of_core(CoreId c) { return static_cast<QueueId>(c); }
inline constexpr CoreId core_of_queue(QueueId q) { return static_cast<CoreId>(q); }

}  // namespace fdsim
