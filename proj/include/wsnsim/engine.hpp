#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "wsnsim/baselines.hpp"
#include "wsnsim/priya.hpp"
#include "wsnsim/sensing.hpp"

namespace wsnsim {

/// Everything one run needs. Defaults reproduce the 100-node, 100x100 m,
/// 10 kbit/s setup with 5% operational and 35% CH energy floors.
struct Scenario {
  int node_count = 100;
  double width = 100.0;
  double height = 100.0;
  Position bs{50.0, 175.0};
  RadioParams radio;
  double initial_energy = 2.0;
  double floor_fraction = 0.05;

  ProtocolKind protocol = ProtocolKind::kPriya;
  LeachConfig leach;
  TeenConfig teen;
  ApteenConfig apteen;
  PriyaConfig priya;

  SensingConfig sensing;
  int max_rounds = 10000;
  std::uint64_t seed = 1;

  /// Fixed layout; overrides random deployment when non-empty.
  std::vector<Position> positions;

  bool keep_ledger = false;
  bool keep_packets = false;

  /// Throws ConfigError naming the bad field.
  void validate() const;
  bool operator==(const Scenario&) const = default;
};

struct RoundMetrics {
  int round = 0;
  int alive = 0;
  double cumulative_joules = 0.0;
  long bs_packets = 0;  // cumulative
  long ch_packets = 0;  // cumulative

  bool operator==(const RoundMetrics&) const = default;
};

struct Summary {
  std::optional<int> first_death_round;
  std::optional<int> all_dead_round;
  std::optional<double> cluster_formation_time;  // s
  std::optional<double> avg_delay;               // s, member->CH packets
  std::optional<double> yield_ch;                // packets/s
  std::optional<double> yield_bs;                // packets/s
  double elapsed = 0.0;                          // simulated s
  long total_ch_packets = 0;
  long total_bs_packets = 0;

  bool operator==(const Summary&) const = default;
};

/// Raw run observations `summarize` reduces.
struct RunTrace {
  std::vector<RoundMetrics> rounds;
  std::vector<std::optional<int>> death_rounds;  // per node
  double delay_sum = 0.0;                        // over delivered member->CH packets
  long delay_count = 0;
  std::optional<double> first_ch_delivery_time;  // absolute simulated time
  double elapsed = 0.0;
};

Summary summarize(const RunTrace& trace);

struct MetricsReport {
  ProtocolKind protocol = ProtocolKind::kPriya;
  std::uint64_t seed = 0;
  std::vector<RoundMetrics> rounds;
  std::vector<double> node_dissipation;  // J, initial - remaining
  Summary summary;

  double setup_joules = 0.0;
  double ledger_total = 0.0;
  double data_tx_joules = 0.0;  // ledger total for TxData
  double initial_total = 0.0;
  double remaining_total = 0.0;

  std::vector<EnergyEntry> ledger;  // only with Scenario::keep_ledger
  struct RoundPackets {
    int round = 0;
    std::vector<PacketRecord> packets;
  };
  std::vector<RoundPackets> packets;  // only with Scenario::keep_packets
  std::vector<double> final_energy;
};

std::unique_ptr<Protocol> make_protocol(const Scenario& scenario);

/// Initial node layout for the scenario (explicit positions or seeded deployment).
std::vector<Node> initial_nodes(const Scenario& scenario);

/// Setup, then steady rounds until max_rounds or every node is dead.
/// Deterministic in the scenario. Throws ConfigError before simulating
/// anything if the scenario is invalid.
MetricsReport run(const Scenario& scenario);

}  // namespace wsnsim
