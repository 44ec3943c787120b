#include "fdsim/workload.hpp"

#include <string>

#include "fdsim/errors.hpp"

namespace fdsim {

const char* to_string(ArrivalKind k) {
  switch (k) {
    case ArrivalKind::ConstantRate: return "constant";
    case ArrivalKind::Poisson: return "poisson";
  }
  return "unknown";
}

WorkloadSpec make_flows(std::uint32_t n, const FlowKey& base, double pps,
                        double duration, ArrivalKind kind, SimTime start) {
  if (n == 0) throw SimError("make_flows requires n >= 1");
  if (std::uint32_t(base.src_port) + n - 1 > 65535) {
    throw PortOverflow("source ports " + std::to_string(base.src_port) + ".." +
                       std::to_string(std::uint32_t(base.src_port) + n - 1) +
                       " exceed 65535");
  }
  WorkloadSpec w;
  w.flows.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    FlowSpec f;
    f.key = base;
    f.key.src_port = static_cast<std::uint16_t>(base.src_port + i);
    f.flow_id = i;
    f.arrival = kind;
    f.pps = pps;
    f.start = start;
    f.duration = duration;
    w.flows.push_back(f);
  }
  return w;
}

namespace {

SimTime gap(const FlowSpec& flow, RngStream& rng) {
  switch (flow.arrival) {
    case ArrivalKind::ConstantRate: return 1.0 / flow.pps;
    case ArrivalKind::Poisson: return rng.exponential(1.0 / flow.pps);
  }
  return 1.0 / flow.pps;
}

}  // namespace

SimTime first_arrival(const FlowSpec& flow, RngStream& rng) {
  return flow.start + gap(flow, rng);
}

std::pair<Packet, SimTime> next_arrival(FlowSpec& flow, SimTime now, RngStream& rng) {
  Packet p;
  p.flow = flow.key;
  p.flow_id = flow.flow_id;
  p.seq = flow.next_seq++;
  p.direction = Direction::Rx;
  p.arrival_time = now;
  return {p, now + gap(flow, rng)};
}

}  // namespace fdsim
