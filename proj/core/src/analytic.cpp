#include "fdsim/analytic.hpp"

#include <string>

#include "fdsim/engine.hpp"
#include "fdsim/errors.hpp"
#include "fdsim/ring_buffer.hpp"
#include "fdsim/servicer.hpp"

namespace fdsim {

double old_queue_service_start(const SteeringSwitchParams& p) {
  return p.switch_time - p.arrival_gap + p.backlog_old / p.service_rate;
}

double new_queue_service_start(const SteeringSwitchParams& p) {
  return p.switch_time + p.arrival_gap + p.backlog_new / p.service_rate;
}

bool reorder_predicted(const SteeringSwitchParams& p) {
  return old_queue_service_start(p) > new_queue_service_start(p);
}

double worst_case_lead(std::uint32_t ring_capacity, double service_rate,
                       double arrival_gap) {
  return (ring_capacity - 1.0) / service_rate - 2.0 * arrival_gap;
}

MicroRunResult run_micro_scenario(const SteeringSwitchParams& p) {
  // Each queue must hold its backlog plus the straddling packet.
  if (p.backlog_old >= p.ring_capacity || p.backlog_new >= p.ring_capacity) {
    throw SimError("micro-scenario backlog " +
                   std::to_string(std::max(p.backlog_old, p.backlog_new)) +
                   " exceeds ring capacity " + std::to_string(p.ring_capacity) +
                   " - 1");
  }

  Engine engine;

  RingBuffer old_ring(p.ring_capacity), new_ring(p.ring_capacity);
  CoreServicer old_core(engine, old_ring, 0, p.service_rate);
  CoreServicer new_core(engine, new_ring, 1, p.service_rate);

  // The tracked flow's straddling pair: seq 0 goes to the old queue, seq 1
  // to the new queue. Backlog fillers belong to a different flow.
  MicroRunResult result;
  old_core.set_on_delivery([&](const Packet& pkt, SimTime t) {
    if (pkt.flow_id == 0) result.old_packet_delivery = t;
  });
  new_core.set_on_delivery([&](const Packet& pkt, SimTime t) {
    if (pkt.flow_id == 0) result.new_packet_delivery = t;
  });

  auto filler = [](std::uint32_t k) {
    Packet f;
    f.flow_id = 1;
    f.seq = k;
    return f;
  };
  for (std::uint32_t k = 0; k < p.backlog_old; ++k) old_ring.push(filler(k));
  for (std::uint32_t k = 0; k < p.backlog_new; ++k) new_ring.push(filler(k));

  const SimTime t_old = p.switch_time - p.arrival_gap;
  const SimTime t_new = p.switch_time + p.arrival_gap;

  engine.schedule(t_old, EventKind::PacketArrival, [&] {
    Packet s;
    s.flow_id = 0;
    s.seq = 0;
    s.arrival_time = t_old;
    old_ring.push(s);
    old_core.start(t_old);
  });
  engine.schedule(t_new, EventKind::PacketArrival, [&] {
    Packet s1;
    s1.flow_id = 0;
    s1.seq = 1;
    s1.arrival_time = t_new;
    new_ring.push(s1);
    new_core.start(t_new);
  });

  engine.run();

  result.lead = result.old_packet_delivery - result.new_packet_delivery;
  result.reordered = result.old_packet_delivery > result.new_packet_delivery;
  return result;
}

std::vector<std::uint32_t> default_backlog_grid(std::uint32_t ring_capacity) {
  std::vector<std::uint32_t> grid;
  for (std::uint32_t b : {0u, 1u, 2u, 5u, 10u, 100u, 255u, 511u}) {
    if (b <= ring_capacity - 1) grid.push_back(b);
  }
  return grid;
}

std::vector<double> default_gap_rate_grid() {
  return {0.1, 0.5, 1.0, 2.0, 10.0, 300.0};
}

AgreementReport check_agreement(std::uint32_t ring_capacity, double service_rate,
                                std::span<const double> gap_rate_products,
                                std::span<const std::uint32_t> backlogs) {
  AgreementReport report;
  for (double gr : gap_rate_products) {
    for (std::uint32_t n : backlogs) {
      for (std::uint32_t m : backlogs) {
        SteeringSwitchParams p;
        p.switch_time = 1.0;
        p.arrival_gap = gr / service_rate;
        p.backlog_old = n;
        p.backlog_new = m;
        p.service_rate = service_rate;
        p.ring_capacity = ring_capacity;

        bool predicted = reorder_predicted(p);
        bool simulated = run_micro_scenario(p).reordered;
        ++report.cases_run;
        if (predicted != simulated) {
          report.disagreements.push_back(AgreementCase{p, predicted, simulated});
        }
      }
    }
  }
  return report;
}

}  // namespace fdsim
