#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdsim/types.hpp"

namespace fdsim {

// Closed-form two-queue model of one steering switch. A flow's entry moves
// from the old core to the new core at switch_time; the last packet steered
// to the old queue arrives arrival_gap before the switch, the first packet
// steered to the new queue arrives arrival_gap after it. Each queue already
// holds a backlog, and each core drains its queue at service_rate from its
// packet's arrival onward.
struct SteeringSwitchParams {
  double switch_time = 1.0;        // seconds; keep > arrival_gap, the engine
                                   // cannot schedule before t = 0
  double arrival_gap = 1e-6;       // seconds > 0, half the straddle spacing
  std::uint32_t backlog_old = 0;   // packets ahead in the old queue, <= capacity-1
  std::uint32_t backlog_new = 0;   // packets ahead in the new queue, <= capacity-1
  double service_rate = 1e6;       // packets per second
  std::uint32_t ring_capacity = 512;
};

// Instant the stack starts servicing the straddling packet on the old
// queue: switch_time - arrival_gap + backlog_old / service_rate.
double old_queue_service_start(const SteeringSwitchParams& p);

// Same for the packet that followed the entry to the new queue:
// switch_time + arrival_gap + backlog_new / service_rate.
double new_queue_service_start(const SteeringSwitchParams& p);

// True when the later-sent packet is serviced strictly earlier, i.e. the
// switch reorders the pair. Ties classify as in-order.
bool reorder_predicted(const SteeringSwitchParams& p);

// Largest achievable service-start lead of the old packet over the new one
// for a given ring size: (capacity - 1) / rate - 2 * gap. Reached with the
// old queue full and the new queue empty.
double worst_case_lead(std::uint32_t ring_capacity, double service_rate,
                       double arrival_gap);

// The same two-queue scenario executed on the event engine with the
// production ring buffers and service loops: both cores start servicing at
// their packet's arrival instant and stay busy until drained.
struct MicroRunResult {
  double old_packet_delivery = 0.0;
  double new_packet_delivery = 0.0;
  bool reordered = false;  // old packet delivered strictly after the new one
  double lead = 0.0;       // old_packet_delivery - new_packet_delivery
};

MicroRunResult run_micro_scenario(const SteeringSwitchParams& p);

// Grid comparison of the simulated outcome against the closed form.
struct AgreementCase {
  SteeringSwitchParams params;
  bool predicted = false;
  bool simulated = false;
};

struct AgreementReport {
  std::size_t cases_run = 0;
  std::vector<AgreementCase> disagreements;
  bool all_agree() const { return disagreements.empty(); }
};

// Default grid used by the comparison report: backlogs x gap-rate products.
std::vector<std::uint32_t> default_backlog_grid(std::uint32_t ring_capacity);
std::vector<double> default_gap_rate_grid();

AgreementReport check_agreement(std::uint32_t ring_capacity, double service_rate,
                                std::span<const double> gap_rate_products,
                                std::span<const std::uint32_t> backlogs);

}  // namespace fdsim
