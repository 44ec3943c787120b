#include "fdsim/simulation.hpp"

#include "fdsim/errors.hpp"

namespace fdsim {

RunSummary RunResult::summary(const Scenario& sc) const {
  RunSummary s;
  s.scenario_id = sc.id;
  s.seed = seed;
  s.policy = to_string(sc.scheduler.policy);
  s.n_flows = static_cast<std::uint32_t>(stats.n_flows());
  s.ring_size = sc.ring_size;
  s.service_rate_pps = sc.service_rate_pps;
  s.total_delivered = stats.total_delivered();
  s.total_reordered = stats.total_reordered();
  s.reorder_ratio = reorder_ratio_or_zero();
  s.total_drops = stats.drops();
  s.dupacks = stats.total_dupacks();
  s.would_retransmits = stats.total_would_retransmits();
  s.migrations = migrations.size();
  return s;
}

Simulation::Simulation(const Scenario& scenario, std::uint64_t seed, bool keep_trace)
    : scenario_(scenario),
      keep_trace_(keep_trace),
      engine_(seed),
      stats_(scenario.workload.n_flows) {
  scenario_.validate();
  const auto& w = scenario_.workload;

  workload_ = make_flows(w.n_flows, scenario_.base_flow, w.flow_pps(w.n_flows),
                         w.duration_s, w.arrival);

  nic_ = std::make_unique<Nic>(
      scenario_.cores, scenario_.ring_size,
      RssIndirection::make(scenario_.rss.indirection_len, scenario_.cores,
                           scenario_.rss.hash_key),
      FdTable(scenario_.fd.sample_rate), scenario_.fd.enabled);

  servicers_.reserve(scenario_.cores);
  for (CoreId c = 0; c < scenario_.cores; ++c) {
    servicers_.push_back(std::make_unique<CoreServicer>(
        engine_, nic_->ring(queue_of_core(c)), c, scenario_.service_rate_pps,
        scenario_.exponential_service));
    servicers_.back()->set_on_delivery(
        [this](const Packet& pkt, SimTime now) { handle_delivery(pkt, now); });
  }
  nic_->set_on_interrupt(
      [this](QueueId q, SimTime now) { servicers_[core_of_queue(q)]->start(now); });

  // One application thread per flow, thread id == flow id.
  threads_.resize(w.n_flows);
  for (std::uint32_t i = 0; i < w.n_flows; ++i) {
    threads_[i].id = i;
    threads_[i].flow_ids = {i};
    threads_[i].tx_per_delivery = w.tx_per_delivery;
    threads_[i].current_core = scenario_.scheduler.placement == Placement::RoundRobin
                                   ? static_cast<CoreId>(i % scenario_.cores)
                                   : 0;
  }
  tx_seq_.assign(w.n_flows, 0);

  scheduler_ = std::make_unique<Scheduler>(
      scenario_.scheduler.policy, scenario_.scheduler.interval_s,
      scenario_.scheduler.migrate_prob, scenario_.cores);

  if (scenario_.fd.enabled && scenario_.fd.preinstall) {
    for (const FlowSpec& f : workload_.flows) {
      nic_->fd_table().install(f.key, threads_[f.flow_id].current_core);
    }
  }
}

void Simulation::handle_arrival(std::uint32_t flow_id) {
  FlowSpec& flow = workload_.flows[flow_id];
  const SimTime now = engine_.now();
  auto [pkt, next_t] = next_arrival(flow, now, engine_.rng("arrivals"));
  ++arrivals_;
  nic_->enqueue_rx(std::move(pkt), now);
  if (next_t < flow.end()) {
    engine_.schedule(next_t, EventKind::PacketArrival,
                     [this, flow_id] { handle_arrival(flow_id); });
  }
}

void Simulation::handle_delivery(const Packet& pkt, SimTime now) {
  DeliveryClass cls = stats_.observe_delivery(pkt.flow_id, pkt.seq);
  stats_.dupack_observe(pkt.flow_id, pkt.seq);
  if (keep_trace_) {
    trace_.push_back(DeliveryLogEntry{now, pkt.flow_id, pkt.seq,
                                      core_of_queue(pkt.queue),
                                      pkt.occupancy_at_enqueue, cls});
  }
  if (threads_[pkt.flow_id].tx_per_delivery > 0) {
    const std::uint32_t flow_id = pkt.flow_id;
    engine_.schedule(now, EventKind::TxEmit, [this, flow_id] { handle_tx(flow_id); });
  }
}

void Simulation::handle_tx(std::uint32_t flow_id) {
  const SimTime now = engine_.now();
  AppThread& thread = threads_[flow_id];
  const FlowKey& rx_key = workload_.flows[flow_id].key;
  for (std::uint32_t k = 0; k < thread.tx_per_delivery; ++k) {
    // The application transmits with source and destination swapped
    // relative to what it receives; transmission latency is not modeled.
    Packet tx;
    tx.flow = rx_key.reversed();
    tx.flow_id = flow_id;
    tx.seq = tx_seq_[flow_id]++;
    tx.direction = Direction::Tx;
    tx.arrival_time = now;
    if (scenario_.fd.enabled) {
      nic_->fd_table().update_from_tx(tx.flow, thread.current_core);
    }
  }
}

void Simulation::handle_migration_tick() {
  const SimTime now = engine_.now();
  scheduler_->tick(threads_, now, engine_.rng("scheduler"));
  const SimTime next = now + scenario_.scheduler.interval_s;
  if (next <= scenario_.workload.duration_s) {
    engine_.schedule(next, EventKind::MigrationTick, [this] { handle_migration_tick(); });
  }
}

RunResult Simulation::run() {
  if (ran_) throw SimError("Simulation::run() may only be called once per instance");
  ran_ = true;

  for (FlowSpec& flow : workload_.flows) {
    const SimTime t0 = first_arrival(flow, engine_.rng("arrivals"));
    if (t0 < flow.end()) {
      const std::uint32_t flow_id = flow.flow_id;
      engine_.schedule(t0, EventKind::PacketArrival,
                       [this, flow_id] { handle_arrival(flow_id); });
    }
  }

  if (scenario_.scheduler.policy != SchedulerPolicy::Pinned &&
      scenario_.scheduler.interval_s <= scenario_.workload.duration_s) {
    engine_.schedule(scenario_.scheduler.interval_s, EventKind::MigrationTick,
                     [this] { handle_migration_tick(); });
  }

  // Marker delimiting the arrival window; the queue then drains naturally.
  engine_.schedule(scenario_.workload.duration_s, EventKind::EndOfRun, [] {});

  engine_.run();

  stats_.set_drops(nic_->total_drops());

  RunResult result;
  result.seed = engine_.seed();
  result.arrivals = arrivals_;
  result.interrupts = nic_->interrupts_raised();
  result.end_time = engine_.now();
  result.stats = std::move(stats_);
  result.trace = std::move(trace_);
  result.migrations = scheduler_->migrations();
  return result;
}

RunResult run_scenario(const Scenario& scenario, std::uint64_t seed, bool keep_trace) {
  Simulation sim(scenario, seed, keep_trace);
  return sim.run();
}

}  // namespace fdsim
