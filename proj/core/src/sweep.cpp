#include "fdsim/sweep.hpp"

#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "fdsim/errors.hpp"
#include "fdsim/simulation.hpp"

namespace fdsim {

SweepResult run_sweep(const Scenario& base, std::span<const std::uint32_t> flow_counts,
                      std::span<const std::uint64_t> seeds, unsigned parallelism) {
  if (parallelism == 0) {
    parallelism = std::max(1u, std::thread::hardware_concurrency());
  }

  struct Task {
    Scenario scenario;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  tasks.reserve(flow_counts.size() * seeds.size());
  for (std::uint32_t n : flow_counts) {
    Scenario sc = base;
    sc.workload.n_flows = n;
    sc.validate();
    for (std::uint64_t seed : seeds) tasks.push_back(Task{sc, seed});
  }

  std::vector<RunSummary> runs(tasks.size());
  for (std::size_t start = 0; start < tasks.size(); start += parallelism) {
    const std::size_t stop = std::min(tasks.size(), start + parallelism);
    std::vector<std::future<RunSummary>> batch;
    batch.reserve(stop - start);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, [&tasks, i] {
        const Task& t = tasks[i];
        return run_scenario(t.scenario, t.seed).summary(t.scenario);
      }));
    }
    for (std::size_t i = start; i < stop; ++i) runs[i] = batch[i - start].get();
  }

  SweepResult result;
  result.runs = std::move(runs);
  result.rows.reserve(flow_counts.size());

  const std::size_t per_n = seeds.size();
  for (std::size_t ni = 0; ni < flow_counts.size(); ++ni) {
    std::span<const RunSummary> group(result.runs.data() + ni * per_n, per_n);
    SweepRow row;
    row.n_flows = flow_counts[ni];
    row.n_seeds = per_n;

    std::vector<double> ratios;
    ratios.reserve(per_n);
    for (const RunSummary& r : group) {
      ratios.push_back(r.reorder_ratio);
      row.mean_delivered += double(r.total_delivered);
      row.mean_reordered += double(r.total_reordered);
      row.mean_drops += double(r.total_drops);
      row.mean_dupacks += double(r.dupacks);
      row.mean_would_retransmits += double(r.would_retransmits);
      row.mean_migrations += double(r.migrations);
    }
    const double n = double(per_n);
    row.mean_delivered /= n;
    row.mean_reordered /= n;
    row.mean_drops /= n;
    row.mean_dupacks /= n;
    row.mean_would_retransmits /= n;
    row.mean_migrations /= n;
    for (double r : ratios) row.mean_reorder_ratio += r;
    row.mean_reorder_ratio /= n;
    if (per_n >= 2) {
      row.ci95_halfwidth = confidence_interval(ratios, 0.95).halfwidth;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string sweep_csv_header() {
  return "n_flows,seeds,mean_reorder_ratio,ci95_halfwidth,mean_delivered,"
         "mean_reordered,mean_drops,mean_dupacks,mean_would_retransmits,"
         "mean_migrations";
}

std::string sweep_csv_row(const SweepRow& r) {
  std::ostringstream os;
  os << r.n_flows << ',' << r.n_seeds << ',' << format_double(r.mean_reorder_ratio)
     << ',' << (r.ci95_halfwidth ? format_double(*r.ci95_halfwidth) : "NA") << ','
     << format_double(r.mean_delivered) << ',' << format_double(r.mean_reordered)
     << ',' << format_double(r.mean_drops) << ',' << format_double(r.mean_dupacks)
     << ',' << format_double(r.mean_would_retransmits) << ','
     << format_double(r.mean_migrations);
  return os.str();
}

void write_sweep_csv(const std::string& path, std::span<const SweepRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SimError("cannot open " + path + " for writing");
  out << sweep_csv_header() << '\n';
  for (const auto& r : rows) out << sweep_csv_row(r) << '\n';
}

}  // namespace fdsim
