#include "fdsim/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fdsim/errors.hpp"

namespace fdsim {

const char* to_string(DeliveryClass c) {
  return c == DeliveryClass::InOrder ? "in_order" : "reordered";
}

DeliveryClass ReorderStats::observe_delivery(std::uint32_t flow_id, std::uint64_t seq) {
  FlowStats& f = flows_[flow_id];
  DeliveryClass cls = DeliveryClass::InOrder;
  if (static_cast<std::int64_t>(seq) < f.max_seq_delivered) {
    cls = DeliveryClass::Reordered;
    ++f.reordered;
    ++total_reordered_;
  } else {
    f.max_seq_delivered = static_cast<std::int64_t>(seq);
  }
  ++f.delivered;
  ++total_delivered_;
  return cls;
}

AckKind ReorderStats::dupack_observe(std::uint32_t flow_id, std::uint64_t seq) {
  AckState& a = ack_[flow_id];
  FlowStats& f = flows_[flow_id];

  if (seq == a.next_expected) {
    // Cumulative point advances, draining any buffered run above it.
    ++a.next_expected;
    while (!a.buffered.empty() && *a.buffered.begin() == a.next_expected) {
      a.buffered.erase(a.buffered.begin());
      ++a.next_expected;
    }
    a.dup_streak = 0;
    return AckKind::NewAck;
  }

  // Gap (or a segment below the point): the receiver re-acks the same
  // cumulative point.
  if (seq > a.next_expected) a.buffered.insert(seq);
  ++f.dupacks;
  ++total_dupacks_;
  ++a.dup_streak;
  if (a.dup_streak == 3) {
    ++f.would_retransmits;
    ++total_would_retransmits_;
  }
  return AckKind::DupAck;
}

double ReorderStats::reorder_ratio() const {
  if (total_delivered_ == 0) throw NoData("no packets delivered");
  return static_cast<double>(total_reordered_) / static_cast<double>(total_delivered_);
}

double ReorderStats::flow_reorder_ratio(std::uint32_t flow_id) const {
  const FlowStats& f = flows_[flow_id];
  if (f.delivered == 0) throw NoData("no packets delivered for flow");
  return static_cast<double>(f.reordered) / static_cast<double>(f.delivered);
}

Interval confidence_interval(std::span<const double> samples, double level) {
  if (samples.size() < 2) {
    throw InsufficientSamples("confidence interval needs at least 2 samples, got " +
                              std::to_string(samples.size()));
  }
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double stddev = std::sqrt(ss / (n - 1.0));

  boost::math::students_t dist(n - 1.0);
  const double t = boost::math::quantile(dist, 0.5 + level / 2.0);
  return Interval{mean, t * stddev / std::sqrt(n)};
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

std::string summary_csv_header() {
  return "scenario_id,seed,policy,n_flows,ring_size,service_rate_pps,"
         "total_delivered,total_reordered,reorder_ratio,total_drops,dupacks,"
         "would_retransmits,migrations";
}

std::string summary_csv_row(const RunSummary& s) {
  std::ostringstream os;
  os << s.scenario_id << ',' << s.seed << ',' << s.policy << ',' << s.n_flows << ','
     << s.ring_size << ',' << format_double(s.service_rate_pps) << ','
     << s.total_delivered << ',' << s.total_reordered << ','
     << format_double(s.reorder_ratio) << ',' << s.total_drops << ',' << s.dupacks
     << ',' << s.would_retransmits << ',' << s.migrations;
  return os.str();
}

void write_summary_csv(const std::string& path, std::span<const RunSummary> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SimError("cannot open " + path + " for writing");
  out << summary_csv_header() << '\n';
  for (const auto& r : rows) out << summary_csv_row(r) << '\n';
}

std::string trace_csv_header() { return "time_s,flow_id,seq,classification"; }

void write_trace_csv(const std::string& path, std::span<const DeliveryLogEntry> log) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SimError("cannot open " + path + " for writing");
  out << trace_csv_header() << '\n';
  for (const auto& e : log) {
    out << format_double(e.time) << ',' << e.flow_id << ',' << e.seq << ','
        << to_string(e.classification) << '\n';
  }
}

}  // namespace fdsim
