#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fdsim/flow_key.hpp"
#include "fdsim/scheduler.hpp"
#include "fdsim/toeplitz.hpp"
#include "fdsim/workload.hpp"

namespace fdsim {

// Where application threads sit before the scheduler acts. AllOnCoreZero
// models a parent process spawning its workers on one core; RoundRobin
// models a pre-spread start.
enum class Placement : std::uint8_t { AllOnCoreZero, RoundRobin };

const char* to_string(Placement p);

struct SchedulerConfig {
  SchedulerPolicy policy = SchedulerPolicy::Pinned;
  double interval_s = 0.05;
  double migrate_prob = 0.5;
  Placement placement = Placement::AllOnCoreZero;
};

struct FdConfig {
  bool enabled = true;
  std::uint32_t sample_rate = 20;
  // Install each flow's entry at its thread's starting core before traffic
  // begins, modeling connections established ahead of the run.
  bool preinstall = true;
};

struct RssConfig {
  std::uint32_t indirection_len = 128;
  std::vector<std::uint8_t> hash_key{kRssVerificationKey.begin(),
                                     kRssVerificationKey.end()};
};

struct WorkloadConfig {
  std::uint32_t n_flows = 200;
  // Exactly one of the two rates is positive: per_flow_pps fixes each
  // flow's rate; total_pps divides an aggregate budget evenly (and keeps
  // it constant across flow-count sweeps). The default keeps aggregate
  // utilization at 0.5 of the default 8-core x 100k pps capacity.
  double per_flow_pps = 0.0;
  double total_pps = 400000.0;
  ArrivalKind arrival = ArrivalKind::Poisson;
  double duration_s = 10.0;
  std::uint32_t tx_per_delivery = 1;

  double flow_pps(std::uint32_t n) const {
    return per_flow_pps > 0.0 ? per_flow_pps : total_pps / n;
  }
};

struct OutputConfig {
  std::string summary_path = "summary.csv";
  std::string trace_path;  // empty -> no trace file
};

struct Scenario {
  std::string id = "scenario";
  std::uint32_t cores = 8;
  std::uint32_t ring_size = 512;
  double service_rate_pps = 100000.0;
  bool exponential_service = false;
  SchedulerConfig scheduler;
  FdConfig fd;
  RssConfig rss;
  WorkloadConfig workload;
  OutputConfig outputs;
  std::vector<std::uint64_t> seeds{1};

  // Flow template; scenario files do not override these.
  FlowKey base_flow{ipv4(192, 168, 1, 2), ipv4(192, 168, 1, 10), 6, 40000, 5001};

  // Throws ValidationError naming the violated invariant.
  void validate() const;
};

// Structured-text scenario format: `key = value` lines grouped under
// [section] headers, '#' comments. Unknown sections or keys are rejected.
Scenario parse_scenario(std::string_view text, std::string_view source_name = "<memory>");
Scenario load_scenario(const std::string& path);

}  // namespace fdsim
