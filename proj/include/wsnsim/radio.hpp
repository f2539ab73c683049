#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wsnsim/node.hpp"

namespace wsnsim {

/// First-order radio model coefficients and link parameters.
///
/// Defaults follow the usual LEACH-lineage values: 50 nJ/bit electronics,
/// 100 pJ/bit/m^2 amplifier, 2000-bit data and 200-bit control frames over a
/// 10 kbit/s link. Only the free-space d^2 term is modeled.
struct RadioParams {
  double e_elec = 50e-9;     // J/bit
  double eps_amp = 100e-12;  // J/bit/m^2
  std::uint32_t data_bits = 2000;
  std::uint32_t ctrl_bits = 200;
  double bandwidth = 10'000.0;  // bit/s
  double e_agg = 0.0;           // J/bit/signal

  /// Throws ConfigError naming the bad field.
  void validate() const;

  bool operator==(const RadioParams&) const = default;
};

/// e_elec*k + eps_amp*k*d^2
double tx_cost(std::uint64_t bits, double distance, const RadioParams& radio);

/// e_elec*k
double rx_cost(std::uint64_t bits, const RadioParams& radio);

/// e_agg*k*n_inputs; zero with the default e_agg.
double aggregate_cost(std::uint64_t bits, std::uint64_t n_inputs, const RadioParams& radio);

/// Serialization delay in seconds. Propagation is ignored.
double tx_delay(std::uint64_t bits, const RadioParams& radio);

enum class EnergyCause { kTxData = 0, kTxCtrl = 1, kRx = 2, kAggregate = 3 };
inline constexpr std::size_t kEnergyCauseCount = 4;

const char* cause_name(EnergyCause cause);

struct EnergyEntry {
  int node_id = 0;
  int round = 0;
  EnergyCause cause = EnergyCause::kTxData;
  double joules = 0.0;

  bool operator==(const EnergyEntry&) const = default;
};

struct Deduction {
  double spent = 0.0;  // actually removed, after clamping at zero
  bool died = false;
};

/// Removes `joules` from a live node, clamping at zero. The node dies when
/// its remaining energy falls strictly below `floor`.
///
/// Throws std::logic_error if the node is already dead or joules < 0.
Deduction deduct(Node& node, double joules, double floor);

/// Running energy accounts. Entry retention is optional because long runs
/// produce millions of entries; totals are always kept.
class EnergyLedger {
 public:
  explicit EnergyLedger(bool keep_entries = false) : keep_entries_(keep_entries) {}

  void record(const EnergyEntry& entry);

  double total() const { return total_; }
  double total(EnergyCause cause) const { return by_cause_[static_cast<std::size_t>(cause)]; }
  std::size_t size() const { return count_; }
  std::span<const EnergyEntry> entries() const { return entries_; }
  bool keeps_entries() const { return keep_entries_; }

 private:
  bool keep_entries_;
  double total_ = 0.0;
  std::array<double, kEnergyCauseCount> by_cause_{};
  std::size_t count_ = 0;
  std::vector<EnergyEntry> entries_;
};

}  // namespace wsnsim
