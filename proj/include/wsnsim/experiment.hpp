#pragma once

#include <string>
#include <vector>

#include "wsnsim/config.hpp"

namespace wsnsim {

inline constexpr const char* kOutputFiles[] = {"deaths.csv", "energy.csv", "packets.csv",
                                                "node_energy.csv", "summary.csv"};

struct ExperimentResult {
  std::vector<MetricsReport> reports;  // protocol-major, seed-minor
  std::vector<std::string> written;    // file names inside out_dir
};

/// Median over equal-index values. Even counts average the middle pair.
double median(std::vector<double> values);

struct CsvTables {
  std::string deaths;
  std::string energy;
  std::string packets;
  std::string node_energy;
  std::string summary;
};

/// Per-protocol series are medians across seeds; shorter runs are padded
/// with their final round's values.
CsvTables render_csv(const ExperimentSpec& spec, const std::vector<MetricsReport>& reports);

/// Runs every (protocol, seed) pair, possibly in parallel, and writes the
/// CSV files plus resolved.cfg into spec.out_dir. Files are written to
/// temporaries and renamed only after all succeed. Throws IoError.
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned threads = 0);

}  // namespace wsnsim
