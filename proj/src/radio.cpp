#include "wsnsim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsnsim/errors.hpp"

namespace wsnsim {

void RadioParams::validate() const {
  auto nonneg = [](double v, const char* key) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(std::string(key) + " must be >= 0");
  };
  nonneg(e_elec, "radio.e_elec");
  nonneg(eps_amp, "radio.eps_amp");
  nonneg(e_agg, "radio.e_agg");
  if (data_bits == 0) throw ConfigError("radio.data_bits must be > 0");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) throw ConfigError("radio.bandwidth must be > 0");
}

double tx_cost(std::uint64_t bits, double distance, const RadioParams& radio) {
  const auto k = static_cast<double>(bits);
  return radio.e_elec * k + radio.eps_amp * k * distance * distance;
}

double rx_cost(std::uint64_t bits, const RadioParams& radio) {
  return radio.e_elec * static_cast<double>(bits);
}

double aggregate_cost(std::uint64_t bits, std::uint64_t n_inputs, const RadioParams& radio) {
  return radio.e_agg * static_cast<double>(bits) * static_cast<double>(n_inputs);
}

double tx_delay(std::uint64_t bits, const RadioParams& radio) {
  return static_cast<double>(bits) / radio.bandwidth;
}

const char* cause_name(EnergyCause cause) {
  switch (cause) {
    case EnergyCause::kTxData: return "tx_data";
    case EnergyCause::kTxCtrl: return "tx_ctrl";
    case EnergyCause::kRx: return "rx";
    case EnergyCause::kAggregate: return "aggregate";
  }
  return "?";
}

Deduction deduct(Node& node, double joules, double floor) {
  if (!node.alive) throw std::logic_error("deduct: node " + std::to_string(node.id) + " is dead");
  if (!(joules >= 0.0)) throw std::logic_error("deduct: negative energy");
  Deduction d;
  d.spent = std::min(joules, node.energy);
  node.energy -= d.spent;
  if (node.energy < floor) {
    node.alive = false;
    d.died = true;
  }
  return d;
}

void EnergyLedger::record(const EnergyEntry& entry) {
  total_ += entry.joules;
  by_cause_[static_cast<std::size_t>(entry.cause)] += entry.joules;
  ++count_;
  if (keep_entries_) entries_.push_back(entry);
}

}  // namespace wsnsim
