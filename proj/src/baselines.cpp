#include "wsnsim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wsnsim/errors.hpp"

namespace wsnsim {

namespace {

long epoch_length(double p) { return std::max(1L, std::lround(1.0 / p)); }

}  // namespace

int LeachConfig::rounds_per_epoch() const { return static_cast<int>(epoch_length(p)); }

void LeachConfig::validate() const {
  if (!(p > 0.0 && p <= 1.0)) throw ConfigError("leach.p must be in (0, 1]");
  if (setup_period < 1) throw ConfigError("baseline.setup_period must be >= 1");
}

void TeenConfig::validate() const {
  if (!(soft_threshold >= 0.0)) throw ConfigError("teen.soft_threshold must be >= 0");
}

void ApteenConfig::validate() const {
  if (!(soft_threshold >= 0.0)) throw ConfigError("apteen.soft_threshold must be >= 0");
  if (count_time < 1) throw ConfigError("apteen.count_time must be >= 1");
}

double leach_threshold(double p, long r, bool in_g) {
  if (!in_g) return 0.0;
  const long m = r % epoch_length(p);
  const double denom = 1.0 - p * static_cast<double>(m);
  if (denom <= 0.0) return 1.0;
  return std::clamp(p / denom, 0.0, 1.0);
}

std::vector<int> leach_elect(std::span<const Node> nodes, LeachState& state, double p, long r,
                             Rng& rng) {
  auto reset = [&] {
    state.g_set.clear();
    for (const auto& n : nodes)
      if (n.alive) state.g_set.insert(n.id);
  };
  if (r % epoch_length(p) == 0) reset();
  std::erase_if(state.g_set,
                [&](int id) { return !nodes[static_cast<std::size_t>(id)].alive; });
  // Deaths can exhaust G before the epoch ends; start a fresh one.
  if (state.g_set.empty()) reset();
  if (state.g_set.empty()) return {};

  const double t = leach_threshold(p, r, true);
  std::vector<int> elected;
  while (elected.empty()) {
    for (int id : state.g_set)
      if (rng.uniform01() < t) elected.push_back(id);
  }
  for (int id : elected) state.g_set.erase(id);
  return elected;
}

std::vector<Cluster> leach_join(Network& net, std::span<const int> ch_ids) {
  const auto ctrl = net.radio().ctrl_bits;
  for (auto& n : net.nodes()) {
    n.cluster_id.reset();
    if (n.alive) n.role = Role::kMember;
  }
  std::vector<int> heads(ch_ids.begin(), ch_ids.end());
  std::sort(heads.begin(), heads.end());
  for (int ch : heads) net.node(ch).role = Role::kCH;

  std::vector<int> alive;
  for (const auto& n : net.nodes())
    if (n.alive) alive.push_back(n.id);

  for (int ch : heads) net.broadcast(ch, alive, ctrl);

  std::vector<Cluster> clusters;
  for (int ch : heads) {
    if (!net.alive(ch)) continue;
    Cluster c;
    c.id = static_cast<int>(clusters.size());
    c.heads = {ch};
    c.members = {ch};
    clusters.push_back(std::move(c));
  }
  if (clusters.empty()) return clusters;

  for (int id : alive) {
    if (!net.alive(id) || net.node(id).role == Role::kCH) continue;
    std::size_t best = clusters.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const int ch = clusters[c].heads.front();
      if (!net.alive(ch)) continue;
      const double d = net.distance_between(id, ch);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    if (best == clusters.size()) continue;
    if (net.unicast(id, clusters[best].heads.front(), ctrl, EnergyCause::kTxCtrl))
      clusters[best].members.push_back(id);
  }

  for (auto& c : clusters) {
    std::sort(c.members.begin(), c.members.end());
    std::vector<Position> pts;
    for (int id : c.members) {
      pts.push_back(net.node(id).pos);
      net.node(id).cluster_id = c.id;
    }
    c.centroid = centroid(pts);
    // TDMA schedule (and TEEN/APTEEN thresholds) from the CH.
    net.broadcast(c.heads.front(), c.members, ctrl);
  }
  return clusters;
}

bool teen_should_transmit(double value, std::optional<double> last_sent, const TeenConfig& cfg) {
  if (!(value > cfg.hard_threshold)) return false;
  return !last_sent || std::abs(value - *last_sent) >= cfg.soft_threshold;
}

bool apteen_should_transmit(double value, std::optional<double> last_sent, int rounds_since_tx,
                            const ApteenConfig& cfg) {
  return teen_should_transmit(value, last_sent, cfg.thresholds()) ||
         rounds_since_tx >= cfg.count_time;
}

void BaselineGate::tick(Node& node) const {
  if (variant == BaselineVariant::kApteen) ++node.rounds_since_tx;
}

bool BaselineGate::pass(Node& node, double value) const {
  bool yes = true;
  switch (variant) {
    case BaselineVariant::kLeach: return true;
    case BaselineVariant::kTeen: yes = teen_should_transmit(value, node.last_sent_value, teen); break;
    case BaselineVariant::kApteen:
      yes = apteen_should_transmit(value, node.last_sent_value, node.rounds_since_tx, apteen);
      break;
  }
  if (yes) {
    node.last_sent_value = value;
    node.rounds_since_tx = 0;
  }
  return yes;
}

void BaselineGate::reset(Node& node) const {
  node.last_sent_value.reset();
  node.rounds_since_tx = 0;
}

RoundEvents baseline_steady_round(Network& net, std::span<const Cluster> clusters,
                                  std::span<const std::vector<SlotAssignment>> schedules,
                                  std::span<const double> readings, const BaselineGate& gate) {
  const auto bits = net.radio().data_bits;
  const double tau = tx_delay(bits, net.radio());
  RoundEvents ev;
  for (auto& n : net.nodes())
    if (n.alive) gate.tick(n);

  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const int ch = clusters[i].heads.front();
    if (!net.alive(ch)) continue;

    long inputs = 0;
    // The aggregate is tagged with its largest input.
    PacketRecord best{ch, ch, ch, PacketKind::kMemberToHead, 0, 0.0, 0.0, false};
    bool have_best = false;
    auto offer = [&](const PacketRecord& p) {
      ++inputs;
      if (!have_best || p.value > best.value) {
        best = p;
        have_best = true;
      }
    };

    const double own = readings[static_cast<std::size_t>(ch)];
    if (gate.pass(net.node(ch), own)) offer({ch, ch, ch, PacketKind::kMemberToHead, 0, 0.0, own, false});

    for (const auto& slot : schedules[i]) {
      if (!net.alive(ch)) break;
      const int m = slot.node_id;
      if (!net.alive(m)) continue;
      const double v = readings[static_cast<std::size_t>(m)];
      if (!gate.pass(net.node(m), v)) continue;
      if (!net.unicast(m, ch, bits, EnergyCause::kTxData)) continue;
      PacketRecord p{m, m, ch, PacketKind::kMemberToHead, 1, slot.slot * tau + tau, v, false};
      ev.packets.push_back(p);
      offer(p);
    }
    if (inputs == 0 || !net.alive(ch)) continue;

    const double agg = aggregate_cost(bits, static_cast<std::uint64_t>(inputs), net.radio());
    if (agg > 0.0 && !net.charge(ch, EnergyCause::kAggregate, agg)) continue;
    if (!net.uplink(ch, bits)) continue;
    ev.packets.push_back({best.origin, ch, kBaseStation, PacketKind::kToBaseStation, best.hops + 1,
                          best.delay + tau, best.value, false});
  }
  return ev;
}

BaselineProtocol::BaselineProtocol(BaselineVariant variant, LeachConfig leach, TeenConfig teen,
                                   ApteenConfig apteen)
    : leach_(leach), gate_{variant, teen, apteen} {}

ProtocolKind BaselineProtocol::kind() const {
  switch (gate_.variant) {
    case BaselineVariant::kLeach: return ProtocolKind::kLeach;
    case BaselineVariant::kTeen: return ProtocolKind::kTeen;
    case BaselineVariant::kApteen: return ProtocolKind::kApteen;
  }
  return ProtocolKind::kLeach;
}

void BaselineProtocol::setup(Network& net, Rng& rng) {
  rounds_since_setup_ = 0;
  clusters_.clear();
  heads_.clear();
  schedules_.clear();
  if (net.alive_count() == 0) return;

  const auto elected = leach_elect(net.nodes(), state_, leach_.p, state_.election, rng);
  ++state_.election;
  clusters_ = leach_join(net, elected);
  for (const auto& c : clusters_) {
    const int ch = c.heads.front();
    heads_.push_back(ch);
    std::vector<int> slot_holders;
    for (int id : c.members)
      if (id != ch && net.alive(id)) slot_holders.push_back(id);
    schedules_.push_back(tdma_slots(slot_holders));
  }
  for (auto& n : net.nodes())
    if (n.alive) gate_.reset(n);
}

RoundEvents BaselineProtocol::steady_round(Network& net, std::span<const double> readings) {
  return baseline_steady_round(net, clusters_, schedules_, readings, gate_);
}

bool BaselineProtocol::maybe_rotate(Network& net, Rng& rng) {
  if (++rounds_since_setup_ < leach_.setup_period || net.alive_count() == 0) return false;
  setup(net, rng);
  return true;
}

}  // namespace wsnsim
