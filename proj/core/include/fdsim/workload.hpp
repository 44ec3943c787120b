#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fdsim/flow_key.hpp"
#include "fdsim/packet.hpp"
#include "fdsim/rng.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

enum class ArrivalKind : std::uint8_t { ConstantRate, Poisson };

const char* to_string(ArrivalKind k);

// One open-loop traffic source: per-flow arrival process with sequence
// numbers assigned 0,1,2,... gaplessly at the source.
struct FlowSpec {
  FlowKey key;
  std::uint32_t flow_id = 0;
  ArrivalKind arrival = ArrivalKind::ConstantRate;
  double pps = 0.0;
  SimTime start = 0.0;
  double duration = 0.0;
  std::uint64_t next_seq = 0;

  SimTime end() const { return start + duration; }
};

struct WorkloadSpec {
  std::vector<FlowSpec> flows;
  std::size_t n() const { return flows.size(); }
};

// n flows differing only in source port (base.src_port + i).
// Throws PortOverflow if base.src_port + n - 1 > 65535.
WorkloadSpec make_flows(std::uint32_t n, const FlowKey& base, double pps,
                        double duration, ArrivalKind kind = ArrivalKind::ConstantRate,
                        SimTime start = 0.0);

// Time of the flow's first arrival (one inter-arrival gap after start).
SimTime first_arrival(const FlowSpec& flow, RngStream& rng);

// Emits the packet arriving now and the time of the following arrival.
std::pair<Packet, SimTime> next_arrival(FlowSpec& flow, SimTime now, RngStream& rng);

}  // namespace fdsim
