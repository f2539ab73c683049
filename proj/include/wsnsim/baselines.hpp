#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wsnsim/protocol.hpp"
#include "wsnsim/tdma.hpp"

namespace wsnsim {

struct LeachConfig {
  double p = 0.05;       // desired CH fraction
  int setup_period = 20;  // simulation rounds between re-elections

  int rounds_per_epoch() const;
  void validate() const;
  bool operator==(const LeachConfig&) const = default;
};

/// Election bookkeeping. `election` counts setups, i.e. LEACH rounds.
struct LeachState {
  std::set<int> g_set;
  long election = 0;
};

/// T(n) = p / (1 - p (r mod 1/p)) for members of G, 0 otherwise. Clamped to
/// [0, 1]; equals 1 in the last round of an epoch.
double leach_threshold(double p, long r, bool in_g);

/// One election. Resets G to the alive nodes at epoch boundaries (or when no
/// alive node is left in G), draws one uniform per alive G member, and
/// repeats the draw until at least one CH is elected. Elected nodes leave G.
/// Returns the elected ids in ascending order.
std::vector<int> leach_elect(std::span<const Node> nodes, LeachState& state, double p, long r,
                             Rng& rng);

/// Advertisement, join and schedule exchange. Each alive non-CH joins its
/// nearest CH (ties to the lower CH id). Control frames are charged at
/// ctrl_bits. Clusters come back ordered by CH id.
std::vector<Cluster> leach_join(Network& net, std::span<const int> ch_ids);

struct TeenConfig {
  double hard_threshold = 30.0;
  double soft_threshold = 2.0;

  void validate() const;
  bool operator==(const TeenConfig&) const = default;
};

struct ApteenConfig {
  std::string attribute = "temperature";
  double hard_threshold = 30.0;
  double soft_threshold = 2.0;
  int count_time = 5;  // rounds

  TeenConfig thresholds() const { return {hard_threshold, soft_threshold}; }
  void validate() const;
  bool operator==(const ApteenConfig&) const = default;
};

/// value > HT and (first report or |value - last_sent| >= ST).
bool teen_should_transmit(double value, std::optional<double> last_sent, const TeenConfig& cfg);

/// TEEN gate, or forced once the node has been silent for CT rounds.
bool apteen_should_transmit(double value, std::optional<double> last_sent, int rounds_since_tx,
                            const ApteenConfig& cfg);

enum class BaselineVariant { kLeach, kTeen, kApteen };

/// Per-node transmit gate for the three baselines; updates TEEN/APTEEN
/// state when it says yes.
struct BaselineGate {
  BaselineVariant variant = BaselineVariant::kLeach;
  TeenConfig teen;
  ApteenConfig apteen;

  /// Called once per round per alive node before any gating.
  void tick(Node& node) const;
  bool pass(Node& node, double value) const;
  void reset(Node& node) const;
};

/// Steady-state round shared by LEACH/TEEN/APTEEN: gated members report to
/// their CH in slot order, each CH with at least one input (its own gated
/// reading counts) sends one aggregate to the BS.
RoundEvents baseline_steady_round(Network& net, std::span<const Cluster> clusters,
                                  std::span<const std::vector<SlotAssignment>> schedules,
                                  std::span<const double> readings, const BaselineGate& gate);

/// LEACH, TEEN or APTEEN: LEACH election and join, re-run every
/// `setup_period` rounds, with the variant's transmit gate.
class BaselineProtocol final : public Protocol {
 public:
  BaselineProtocol(BaselineVariant variant, LeachConfig leach, TeenConfig teen = {},
                   ApteenConfig apteen = {});

  ProtocolKind kind() const override;
  void setup(Network& net, Rng& rng) override;
  RoundEvents steady_round(Network& net, std::span<const double> readings) override;
  bool maybe_rotate(Network& net, Rng& rng) override;
  const std::vector<Cluster>& clusters() const override { return clusters_; }

  const LeachState& leach_state() const { return state_; }
  const std::vector<int>& cluster_heads() const { return heads_; }
  const std::vector<std::vector<SlotAssignment>>& schedules() const { return schedules_; }

 private:
  LeachConfig leach_;
  BaselineGate gate_;
  LeachState state_;
  std::vector<Cluster> clusters_;
  std::vector<int> heads_;
  std::vector<std::vector<SlotAssignment>> schedules_;
  int rounds_since_setup_ = 0;
};

}  // namespace wsnsim
