#include "wsnsim/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wsnsim/topology.hpp"

namespace wsnsim {

Network::Network(std::vector<Node> nodes, Position bs, RadioParams radio, double floor_fraction,
                 bool keep_ledger)
    : nodes_(std::move(nodes)),
      bs_(bs),
      radio_(radio),
      floor_fraction_(floor_fraction),
      ledger_(keep_ledger),
      death_round_(nodes_.size()) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id != static_cast<int>(i))
      throw std::logic_error("Network: node ids must equal their index");
    if (nodes_[i].alive) ++alive_count_;
  }
}

double Network::distance_between(int a, int b) const { return distance(node(a).pos, node(b).pos); }

double Network::distance_to_bs(int id) const { return distance(node(id).pos, bs_); }

bool Network::charge(int id, EnergyCause cause, double joules) {
  Node& n = node(id);
  const Deduction d = deduct(n, joules, floor(id));
  if (d.spent > 0.0) ledger_.record({id, round_, cause, d.spent});
  if (d.died) {
    death_round_[static_cast<std::size_t>(id)] = round_;
    n.role = Role::kMember;
    --alive_count_;
  }
  return n.alive;
}

void Network::learn(int a, int b) {
  const double d = distance_between(a, b);
  node(a).known_distances[b] = d;
  node(b).known_distances[a] = d;
}

void Network::advance(std::uint32_t bits) { clock_ += tx_delay(bits, radio_); }

bool Network::unicast(int from, int to, std::uint32_t bits, EnergyCause cause) {
  if (!alive(from)) return false;
  const bool receiver_up = alive(to);
  charge(from, cause, tx_cost(bits, distance_between(from, to), radio_));
  advance(bits);
  if (!receiver_up) return false;
  learn(from, to);
  charge(to, EnergyCause::kRx, rx_cost(bits, radio_));
  return true;
}

bool Network::uplink(int from, std::uint32_t bits, EnergyCause cause) {
  if (!alive(from)) return false;
  charge(from, cause, tx_cost(bits, distance_to_bs(from), radio_));
  advance(bits);
  return true;
}

bool Network::downlink(int to, std::uint32_t bits) {
  advance(bits);
  if (!alive(to)) return false;
  charge(to, EnergyCause::kRx, rx_cost(bits, radio_));
  return true;
}

int Network::broadcast(int from, std::span<const int> receivers, std::uint32_t bits) {
  if (!alive(from)) return 0;
  double reach = -1.0;
  for (int r : receivers)
    if (r != from && alive(r)) reach = std::max(reach, distance_between(from, r));
  if (reach < 0.0) return 0;
  // Receivers are fixed before the sender pays, so a sender dying on this
  // frame still completes it.
  std::vector<int> targets;
  for (int r : receivers)
    if (r != from && alive(r)) targets.push_back(r);
  charge(from, EnergyCause::kTxCtrl, tx_cost(bits, reach, radio_));
  advance(bits);
  for (int r : targets) {
    learn(from, r);
    charge(r, EnergyCause::kRx, rx_cost(bits, radio_));
  }
  return static_cast<int>(targets.size());
}

double Network::initial_energy_total() const {
  double s = 0.0;
  for (const auto& n : nodes_) s += n.initial_energy;
  return s;
}

double Network::remaining_energy_total() const {
  double s = 0.0;
  for (const auto& n : nodes_) s += n.energy;
  return s;
}

}  // namespace wsnsim
