#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdsim/metrics.hpp"
#include "fdsim/scenario.hpp"

namespace fdsim {

struct SweepRow {
  std::uint32_t n_flows = 0;
  std::size_t n_seeds = 0;
  double mean_reorder_ratio = 0.0;
  // Absent when fewer than two seeds were run (insufficient samples).
  std::optional<double> ci95_halfwidth;
  double mean_delivered = 0.0;
  double mean_reordered = 0.0;
  double mean_drops = 0.0;
  double mean_dupacks = 0.0;
  double mean_would_retransmits = 0.0;
  double mean_migrations = 0.0;
};

struct SweepResult {
  std::vector<RunSummary> runs;  // canonical order: flow counts, then seeds
  std::vector<SweepRow> rows;    // one per flow count
};

// Runs the scenario at each flow count x seed and aggregates per flow
// count. Simulations share nothing and may execute concurrently; results
// are merged in canonical order regardless of completion order.
SweepResult run_sweep(const Scenario& base, std::span<const std::uint32_t> flow_counts,
                      std::span<const std::uint64_t> seeds, unsigned parallelism = 0);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& r);
void write_sweep_csv(const std::string& path, std::span<const SweepRow> rows);

}  // namespace fdsim
