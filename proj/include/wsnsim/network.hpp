#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wsnsim/node.hpp"
#include "wsnsim/radio.hpp"

namespace wsnsim {

/// Node id used for the base station in packet records.
inline constexpr int kBaseStation = -1;

/// Live simulation state shared by the engine and the protocols.
///
/// Every radio action goes through this class so that energy is always
/// charged through `deduct`, written to the ledger, and the simulated clock
/// advances by the serialization delay of each transmission. Dead nodes never
/// transmit or receive.
class Network {
 public:
  Network(std::vector<Node> nodes, Position bs, RadioParams radio, double floor_fraction,
          bool keep_ledger = false);

  std::span<Node> nodes() { return nodes_; }
  std::span<const Node> nodes() const { return nodes_; }
  Node& node(int id) { return nodes_.at(static_cast<std::size_t>(id)); }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return nodes_.size(); }
  bool alive(int id) const { return node(id).alive; }
  int alive_count() const { return alive_count_; }

  const Position& bs() const { return bs_; }
  const RadioParams& radio() const { return radio_; }
  double floor_fraction() const { return floor_fraction_; }
  double floor(int id) const { return floor_fraction_ * node(id).initial_energy; }

  int round() const { return round_; }
  void set_round(int round) { round_ = round; }

  /// Simulated seconds elapsed: sum of all serialization delays so far.
  double clock() const { return clock_; }

  const EnergyLedger& ledger() const { return ledger_; }
  std::optional<int> death_round(int id) const { return death_round_.at(static_cast<std::size_t>(id)); }

  double distance_between(int a, int b) const;
  double distance_to_bs(int id) const;

  /// Charge a live node directly. Returns whether it is still alive.
  bool charge(int id, EnergyCause cause, double joules);

  /// Node-to-node frame. Sender pays tx, receiver pays rx, both record the
  /// peer distance. Returns true when the receiver was alive to take it.
  /// A dead sender sends nothing.
  bool unicast(int from, int to, std::uint32_t bits, EnergyCause cause);

  /// Node-to-BS frame. Returns false if the sender was already dead.
  bool uplink(int from, std::uint32_t bits, EnergyCause cause = EnergyCause::kTxData);

  /// BS-to-node frame; the BS is unconstrained, the node pays rx.
  bool downlink(int to, std::uint32_t bits);

  /// One transmission sized to reach the farthest alive receiver. Returns the
  /// number of receivers that took it; no receivers means no transmission.
  int broadcast(int from, std::span<const int> receivers, std::uint32_t bits);

  /// Sum over nodes of initial energy.
  double initial_energy_total() const;
  double remaining_energy_total() const;

 private:
  void learn(int a, int b);
  void advance(std::uint32_t bits);

  std::vector<Node> nodes_;
  Position bs_;
  RadioParams radio_;
  double floor_fraction_;
  EnergyLedger ledger_;
  std::vector<std::optional<int>> death_round_;
  int alive_count_ = 0;
  int round_ = 0;
  double clock_ = 0.0;
};

}  // namespace wsnsim
