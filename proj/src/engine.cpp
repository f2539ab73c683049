#include "wsnsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsnsim/errors.hpp"

namespace wsnsim {

void Scenario::validate() const {
  if (node_count < 0) throw ConfigError("nodes must be >= 0");
  if (!(width > 0.0)) throw ConfigError("region.width must be > 0");
  if (!(height > 0.0)) throw ConfigError("region.height must be > 0");
  if (!std::isfinite(bs.x) || !std::isfinite(bs.y)) throw ConfigError("bs.x/bs.y must be finite");
  radio.validate();
  if (!(initial_energy > 0.0)) throw ConfigError("energy.initial must be > 0");
  if (!(floor_fraction >= 0.0 && floor_fraction < 1.0))
    throw ConfigError("energy.floor_frac must be in [0, 1)");
  if (max_rounds < 0) throw ConfigError("rounds must be >= 0");
  leach.validate();
  teen.validate();
  apteen.validate();
  priya.validate();
  if (protocol == ProtocolKind::kPriya && priya.num_clusters > node_count)
    throw ConfigError("priya.clusters (" + std::to_string(priya.num_clusters) +
                      ") exceeds nodes (" + std::to_string(node_count) + ")");
  sensing.validate(node_count);
  if (!positions.empty()) {
    if (positions.size() != static_cast<std::size_t>(node_count))
      throw ConfigError("positions: " + std::to_string(positions.size()) +
                        " entries for " + std::to_string(node_count) + " nodes");
    for (const auto& p : positions)
      if (!(p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height))
        throw ConfigError("positions: point outside the region");
  }
}

Summary summarize(const RunTrace& t) {
  Summary s;
  s.elapsed = t.elapsed;
  bool all_dead = !t.death_rounds.empty();
  int last = 0;
  for (const auto& d : t.death_rounds) {
    if (!d) {
      all_dead = false;
      continue;
    }
    if (!s.first_death_round || *d < *s.first_death_round) s.first_death_round = *d;
    last = std::max(last, *d);
  }
  if (all_dead) s.all_dead_round = last;
  if (!t.rounds.empty()) {
    s.total_bs_packets = t.rounds.back().bs_packets;
    s.total_ch_packets = t.rounds.back().ch_packets;
  }
  if (t.delay_count > 0) s.avg_delay = t.delay_sum / static_cast<double>(t.delay_count);
  s.cluster_formation_time = t.first_ch_delivery_time;
  if (t.elapsed > 0.0 && !t.rounds.empty()) {
    s.yield_ch = static_cast<double>(s.total_ch_packets) / t.elapsed;
    s.yield_bs = static_cast<double>(s.total_bs_packets) / t.elapsed;
  }
  return s;
}

std::unique_ptr<Protocol> make_protocol(const Scenario& sc) {
  switch (sc.protocol) {
    case ProtocolKind::kPriya: return std::make_unique<PriyaProtocol>(sc.priya);
    case ProtocolKind::kLeach:
      return std::make_unique<BaselineProtocol>(BaselineVariant::kLeach, sc.leach);
    case ProtocolKind::kTeen:
      return std::make_unique<BaselineProtocol>(BaselineVariant::kTeen, sc.leach, sc.teen);
    case ProtocolKind::kApteen:
      return std::make_unique<BaselineProtocol>(BaselineVariant::kApteen, sc.leach, sc.teen,
                                                sc.apteen);
  }
  throw ConfigError("unsupported protocol");
}

std::vector<Node> initial_nodes(const Scenario& sc) {
  if (sc.positions.empty())
    return deploy(sc.node_count, sc.width, sc.height, stream_seed(sc.seed, Stream::kTopology),
                  sc.initial_energy);
  std::vector<Node> nodes(sc.positions.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i].id = static_cast<int>(i);
    nodes[i].pos = sc.positions[i];
    nodes[i].energy = sc.initial_energy;
    nodes[i].initial_energy = sc.initial_energy;
  }
  return nodes;
}

MetricsReport run(const Scenario& sc) {
  sc.validate();

  Network net(initial_nodes(sc), sc.bs, sc.radio, sc.floor_fraction, sc.keep_ledger);
  auto protocol = make_protocol(sc);
  Rng rng(stream_seed(sc.seed, Stream::kProtocol));
  SensingField field(sc.sensing, sc.node_count, stream_seed(sc.seed, Stream::kSensing));

  MetricsReport report;
  report.protocol = sc.protocol;
  report.seed = sc.seed;
  report.initial_total = net.initial_energy_total();

  RunTrace trace;
  if (net.alive_count() > 0) {
    net.set_round(0);
    protocol->setup(net, rng);
  }
  report.setup_joules = net.ledger().total();

  long cum_bs = 0;
  long cum_ch = 0;
  for (int r = 0; r < sc.max_rounds && net.alive_count() > 0; ++r) {
    net.set_round(r);
    const auto readings = field.draw(r);
    const double round_start = net.clock();
    RoundEvents ev = protocol->steady_round(net, readings);

    for (const auto& p : ev.packets) {
      if (p.kind == PacketKind::kMemberToHead) {
        ++cum_ch;
        trace.delay_sum += p.delay;
        ++trace.delay_count;
        if (!trace.first_ch_delivery_time) trace.first_ch_delivery_time = round_start + p.delay;
      } else if (p.kind == PacketKind::kToBaseStation) {
        ++cum_bs;
      }
    }
    trace.rounds.push_back({r, net.alive_count(), net.ledger().total(), cum_bs, cum_ch});
    if (sc.keep_packets) report.packets.push_back({r, std::move(ev.packets)});

    protocol->maybe_rotate(net, rng);
  }

  trace.elapsed = net.clock();
  for (std::size_t i = 0; i < net.size(); ++i) trace.death_rounds.push_back(net.death_round(static_cast<int>(i)));

  report.summary = summarize(trace);
  report.rounds = std::move(trace.rounds);
  for (const auto& n : net.nodes()) {
    report.node_dissipation.push_back(n.initial_energy - n.energy);
    report.final_energy.push_back(n.energy);
  }
  report.ledger_total = net.ledger().total();
  report.data_tx_joules = net.ledger().total(EnergyCause::kTxData);
  report.remaining_total = net.remaining_energy_total();
  if (sc.keep_ledger) report.ledger.assign(net.ledger().entries().begin(), net.ledger().entries().end());
  return report;
}

}  // namespace wsnsim
