#include "wsnsim/priya.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "wsnsim/errors.hpp"

namespace wsnsim {

void PriyaConfig::validate() const {
  if (num_clusters < 1) throw ConfigError("priya.clusters must be > 0");
  if (!(range_lo < range_hi)) throw ConfigError("priya.range_lo must be < priya.range_hi");
  if (!(ch_min_energy_frac > 0.0 && ch_min_energy_frac < 1.0))
    throw ConfigError("priya.ch_min_energy_frac must be in (0, 1)");
}

const char* reading_class_name(ReadingClass c) {
  switch (c) {
    case ReadingClass::kSleep: return "sleep";
    case ReadingClass::kNormal: return "normal";
    case ReadingClass::kCritical: return "critical";
  }
  return "?";
}

ReadingClass priya_classify(double value, double lo, double hi) {
  if (value < lo) return ReadingClass::kSleep;
  if (value > hi) return ReadingClass::kCritical;
  return ReadingClass::kNormal;
}

namespace {

template <class Key>
int argmin_alive(std::span<const Node> nodes, std::span<const int> ids, Key key, int exclude = -1) {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int id : ids) {
    const Node& n = nodes[static_cast<std::size_t>(id)];
    if (!n.alive || id == exclude) continue;
    const double d = key(n);
    if (d < best_d || (d == best_d && id < best)) {
      best_d = d;
      best = id;
    }
  }
  return best;
}

int nearest_rch_to_bs(const Network& net, const PriyaHeads& heads) {
  std::vector<int> rchs;
  for (const auto& h : heads.per_cluster) rchs.push_back(h.rch);
  return argmin_alive(net.nodes(), rchs, [&](const Node& n) { return distance(n.pos, net.bs()); });
}

void apply_roles(Network& net, const PriyaAssignment& a) {
  for (auto& c : a.clusters)
    for (int id : c.members)
      if (net.alive(id)) net.node(id).role = Role::kMember;
  for (const auto& h : a.heads.per_cluster) {
    if (net.alive(h.dch)) net.node(h.dch).role = Role::kDCH;
    if (net.alive(h.rch)) net.node(h.rch).role = Role::kRCH;
  }
  if (net.alive(a.heads.pch)) net.node(a.heads.pch).role = Role::kPCH;
}

std::vector<SlotAssignment> issue_schedule(Network& net, const Cluster& c, int dch) {
  std::vector<int> holders;
  for (int id : c.members)
    if (id != dch && net.alive(id)) holders.push_back(id);
  net.broadcast(dch, holders, net.radio().ctrl_bits);
  return tdma_slots(holders);
}

void announce(Network& net, const Cluster& c, const ClusterHeads& h) {
  net.broadcast(h.dch, c.members, net.radio().ctrl_bits);
  if (h.rch != h.dch) net.broadcast(h.rch, c.members, net.radio().ctrl_bits);
}

}  // namespace

PriyaHeads priya_select_heads(std::span<const Node> nodes, std::span<const Cluster> clusters,
                              const Position& bs) {
  PriyaHeads heads;
  std::vector<int> rchs;
  for (const auto& c : clusters) {
    int dch = argmin_alive(nodes, c.members, [&](const Node& n) { return distance(n.pos, c.centroid); });
    if (dch < 0) dch = c.members.front();
    int rch = argmin_alive(nodes, c.members, [&](const Node& n) { return distance(n.pos, bs); }, dch);
    if (rch < 0) rch = dch;
    heads.per_cluster.push_back({dch, rch});
    rchs.push_back(rch);
  }
  heads.pch = argmin_alive(nodes, rchs, [&](const Node& n) { return distance(n.pos, bs); });
  if (heads.pch < 0 && !rchs.empty()) heads.pch = rchs.front();
  return heads;
}

PriyaAssignment priya_setup(Network& net, const PriyaConfig& cfg, std::uint64_t seed) {
  if (net.alive_count() < cfg.num_clusters)
    throw ConfigError("priya.clusters (" + std::to_string(cfg.num_clusters) +
                      ") exceeds alive node count (" + std::to_string(net.alive_count()) + ")");
  PriyaAssignment a;
  a.clusters = partition(net.nodes(), cfg.num_clusters, seed);
  a.heads = priya_select_heads(net.nodes(), a.clusters, net.bs());
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    const auto& h = a.heads.per_cluster[i];
    a.clusters[i].heads = {h.dch, h.rch};
    for (int id : a.clusters[i].members) net.node(id).cluster_id = a.clusters[i].id;
  }
  apply_roles(net, a);

  const auto ctrl = net.radio().ctrl_bits;
  // BS tells each head its role (RCHs also learn the PCH).
  for (const auto& h : a.heads.per_cluster) {
    net.downlink(h.dch, ctrl);
    if (h.rch != h.dch) net.downlink(h.rch, ctrl);
  }
  for (std::size_t i = 0; i < a.clusters.size(); ++i) announce(net, a.clusters[i], a.heads.per_cluster[i]);
  for (std::size_t i = 0; i < a.clusters.size(); ++i)
    a.schedules.push_back(issue_schedule(net, a.clusters[i], a.heads.per_cluster[i].dch));
  return a;
}

RoundEvents priya_steady_round(Network& net, const PriyaAssignment& a,
                               std::span<const double> readings, const PriyaConfig& cfg) {
  const auto bits = net.radio().data_bits;
  const double tau = tx_delay(bits, net.radio());
  const int pch = a.heads.pch;
  auto cls = [&](double v) { return priya_classify(v, cfg.range_lo, cfg.range_hi); };

  RoundEvents ev;
  std::vector<PacketRecord> relay;  // RCH->PCH aggregates awaiting the PCH's uplink

  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    const auto [dch, rch] = a.heads.per_cluster[i];
    if (!net.alive(dch)) continue;

    long inputs = 0;
    PacketRecord best;
    auto offer = [&](const PacketRecord& p) {
      if (inputs++ == 0 || p.value > best.value) best = p;
    };

    const double own = readings[static_cast<std::size_t>(dch)];
    if (cls(own) != ReadingClass::kSleep)
      offer({dch, dch, dch, PacketKind::kMemberToHead, 0, 0.0, own, false});

    for (const auto& slot : a.schedules[i]) {
      if (!net.alive(dch)) break;
      const int m = slot.node_id;
      if (m == dch || !net.alive(m)) continue;
      const double v = readings[static_cast<std::size_t>(m)];
      if (cls(v) == ReadingClass::kSleep) continue;
      if (!net.unicast(m, dch, bits, EnergyCause::kTxData)) continue;
      PacketRecord p{m, m, dch, PacketKind::kMemberToHead, 1, slot.slot * tau + tau, v, false};
      ev.packets.push_back(p);
      offer(p);
    }
    if (inputs == 0 || !net.alive(dch)) continue;

    const double agg = aggregate_cost(bits, static_cast<std::uint64_t>(inputs), net.radio());
    if (agg > 0.0 && !net.charge(dch, EnergyCause::kAggregate, agg)) continue;

    PacketRecord cur = best;
    cur.critical = cls(cur.value) == ReadingClass::kCritical;
    auto hop = [&](int from, int to, PacketKind kind) {
      cur.from = from;
      cur.to = to;
      cur.kind = kind;
      cur.hops += 1;
      cur.delay += tau;
      ev.packets.push_back(cur);
    };

    if (rch != dch) {
      if (!net.alive(rch) || !net.unicast(dch, rch, bits, EnergyCause::kTxData)) continue;
      hop(dch, rch, PacketKind::kHeadToHead);
    }
    if (cur.critical || rch == pch) {
      if (net.uplink(rch, bits)) hop(rch, kBaseStation, PacketKind::kToBaseStation);
    } else {
      if (!net.alive(pch) || !net.unicast(rch, pch, bits, EnergyCause::kTxData)) continue;
      hop(rch, pch, PacketKind::kHeadToHead);
      relay.push_back(cur);
    }
  }

  for (auto p : relay) {
    if (!net.uplink(pch, bits)) break;
    p.from = pch;
    p.to = kBaseStation;
    p.kind = PacketKind::kToBaseStation;
    p.hops += 1;
    p.delay += tau;
    ev.packets.push_back(p);
  }
  return ev;
}

std::optional<PriyaHeads> priya_maybe_rotate(Network& net, PriyaAssignment& a,
                                             const PriyaConfig& cfg) {
  const double min_frac = cfg.ch_min_energy_frac;
  auto depleted = [&](int id) { return !net.alive(id) || net.node(id).energy_fraction() < min_frac; };

  // Nearest peer in the old head's distance table, preferring peers that can
  // still serve as CH. An alive old head keeps the role rather than handing
  // it to a peer that is itself below the CH floor.
  auto successor = [&](int old, const Cluster& c, const std::set<int>& taken) {
    const auto& table = net.node(old).known_distances;
    auto pick = [&](bool need_eligible) {
      int best = -1;
      double best_d = std::numeric_limits<double>::infinity();
      for (int m : c.members) {
        if (taken.contains(m) || !net.alive(m)) continue;
        if (need_eligible && net.node(m).energy_fraction() < min_frac) continue;
        auto it = table.find(m);
        if (it == table.end()) continue;
        if (it->second < best_d) {
          best_d = it->second;
          best = m;
        }
      }
      return best;
    };
    if (int m = pick(true); m >= 0) return m;
    if (net.alive(old)) return old;
    if (int m = pick(false); m >= 0) return m;
    return old;
  };

  bool changed = false;
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    Cluster& c = a.clusters[i];
    ClusterHeads& h = a.heads.per_cluster[i];
    const bool any_alive = std::any_of(c.members.begin(), c.members.end(),
                                       [&](int id) { return net.alive(id); });
    if (!any_alive || !(depleted(h.dch) || depleted(h.rch))) continue;

    std::set<int> taken{h.dch, h.rch};
    ClusterHeads next;
    next.dch = successor(h.dch, c, taken);
    taken.insert(next.dch);
    next.rch = successor(h.rch, c, taken);
    if (!net.alive(next.dch) && net.alive(next.rch)) next.dch = next.rch;
    if (!net.alive(next.rch) && net.alive(next.dch)) next.rch = next.dch;
    if (next == h) continue;

    h = next;
    c.heads = {h.dch, h.rch};
    changed = true;
    if (h.dch == h.rch && !net.alive(h.dch)) continue;
    announce(net, c, h);
    a.schedules[i] = issue_schedule(net, c, h.dch);
  }

  bool pch_changed = false;
  if (changed || !net.alive(a.heads.pch)) {
    const int pch = nearest_rch_to_bs(net, a.heads);
    if (pch >= 0 && pch != a.heads.pch) {
      a.heads.pch = pch;
      pch_changed = true;
      for (const auto& h : a.heads.per_cluster)
        if (net.alive(h.rch)) net.downlink(h.rch, net.radio().ctrl_bits);
    }
  }
  if (!changed && !pch_changed) return std::nullopt;
  apply_roles(net, a);
  return a.heads;
}

void PriyaProtocol::setup(Network& net, Rng& rng) { assignment_ = priya_setup(net, cfg_, rng.next()); }

RoundEvents PriyaProtocol::steady_round(Network& net, std::span<const double> readings) {
  return priya_steady_round(net, assignment_, readings, cfg_);
}

bool PriyaProtocol::maybe_rotate(Network& net, Rng&) {
  return priya_maybe_rotate(net, assignment_, cfg_).has_value();
}

}  // namespace wsnsim
