#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fdsim/types.hpp"

namespace fdsim {

enum class DeliveryClass : std::uint8_t { InOrder, Reordered };
enum class AckKind : std::uint8_t { NewAck, DupAck };

const char* to_string(DeliveryClass c);

struct FlowStats {
  std::int64_t max_seq_delivered = -1;
  std::uint64_t delivered = 0;
  std::uint64_t reordered = 0;
  std::uint64_t dupacks = 0;
  std::uint64_t would_retransmits = 0;
};

struct DeliveryLogEntry {
  SimTime time = 0.0;
  std::uint32_t flow_id = 0;
  std::uint64_t seq = 0;
  CoreId core = 0;
  std::uint32_t ring_occupancy_at_enqueue = 0;
  DeliveryClass classification = DeliveryClass::InOrder;
};

// Receiver-side instrumentation. A delivery is reordered when its sequence
// number falls below the flow's running delivered maximum (RFC 4737's
// reordered-packet criterion). The dupACK observer runs a cumulative-ACK
// automaton per flow; three consecutive duplicate ACKs for one cumulative
// point count as a would-be fast retransmit.
class ReorderStats {
 public:
  explicit ReorderStats(std::uint32_t n_flows)
      : flows_(n_flows), ack_(n_flows) {}

  DeliveryClass observe_delivery(std::uint32_t flow_id, std::uint64_t seq);
  AckKind dupack_observe(std::uint32_t flow_id, std::uint64_t seq);

  // reordered / delivered. Throws NoData when nothing was delivered.
  double reorder_ratio() const;
  double flow_reorder_ratio(std::uint32_t flow_id) const;

  const FlowStats& flow(std::uint32_t flow_id) const { return flows_[flow_id]; }
  std::uint32_t n_flows() const { return static_cast<std::uint32_t>(flows_.size()); }

  std::uint64_t total_delivered() const { return total_delivered_; }
  std::uint64_t total_reordered() const { return total_reordered_; }
  std::uint64_t total_dupacks() const { return total_dupacks_; }
  std::uint64_t total_would_retransmits() const { return total_would_retransmits_; }

  void set_drops(std::uint64_t d) { drops_ = d; }
  std::uint64_t drops() const { return drops_; }

 private:
  struct AckState {
    std::uint64_t next_expected = 0;
    std::set<std::uint64_t> buffered;  // out-of-order segments above the point
    std::uint32_t dup_streak = 0;
  };

  std::vector<FlowStats> flows_;
  std::vector<AckState> ack_;
  std::uint64_t total_delivered_ = 0;
  std::uint64_t total_reordered_ = 0;
  std::uint64_t total_dupacks_ = 0;
  std::uint64_t total_would_retransmits_ = 0;
  std::uint64_t drops_ = 0;
};

struct Interval {
  double mean = 0.0;
  double halfwidth = 0.0;
};

// Student-t interval over independent per-seed samples.
// Throws InsufficientSamples when fewer than two samples are given.
Interval confidence_interval(std::span<const double> samples, double level = 0.95);

// One row of the run summary CSV.
struct RunSummary {
  std::string scenario_id;
  std::uint64_t seed = 0;
  std::string policy;
  std::uint32_t n_flows = 0;
  std::uint32_t ring_size = 0;
  double service_rate_pps = 0.0;
  std::uint64_t total_delivered = 0;
  std::uint64_t total_reordered = 0;
  double reorder_ratio = 0.0;
  std::uint64_t total_drops = 0;
  std::uint64_t dupacks = 0;
  std::uint64_t would_retransmits = 0;
  std::uint64_t migrations = 0;
};

std::string summary_csv_header();
std::string summary_csv_row(const RunSummary& s);
void write_summary_csv(const std::string& path, std::span<const RunSummary> rows);

std::string trace_csv_header();
void write_trace_csv(const std::string& path, std::span<const DeliveryLogEntry> log);

// Deterministic, locale-independent number formatting used in all CSV
// output (shortest round-trip form for doubles).
std::string format_double(double v);

}  // namespace fdsim
