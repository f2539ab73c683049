#include <doctest.h>

#include <algorithm>
#include <limits>

#include "wsnsim/errors.hpp"
#include "wsnsim/priya.hpp"

using namespace wsnsim;

namespace {

std::vector<Node> at(std::initializer_list<Position> pts) {
  std::vector<Node> v;
  for (const auto& p : pts) {
    Node n;
    n.id = static_cast<int>(v.size());
    n.pos = p;
    n.energy = n.initial_energy = 2.0;
    v.push_back(n);
  }
  return v;
}

// Two well separated groups; 0-3 sit near the BS, 4-7 far from it.
Network two_groups() {
  return Network(at({{40, 90}, {45, 95}, {50, 90}, {45, 85}, {10, 10}, {15, 15}, {20, 10}, {15, 5}}),
                 {45, 175}, {}, 0.05);
}

std::size_t cluster_of(const PriyaAssignment& a, int id) {
  for (std::size_t i = 0; i < a.clusters.size(); ++i)
    if (std::count(a.clusters[i].members.begin(), a.clusters[i].members.end(), id)) return i;
  return a.clusters.size();
}

void check_roles(const Network& net, const PriyaAssignment& a) {
  int pch_count = 0;
  for (const auto& n : net.nodes())
    if (n.role == Role::kPCH) ++pch_count;
  CHECK(pch_count == 1);
  bool pch_is_rch = false;
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    const auto& h = a.heads.per_cluster[i];
    CHECK(net.alive(h.dch));
    CHECK(net.alive(h.rch));
    CHECK(std::count(a.clusters[i].members.begin(), a.clusters[i].members.end(), h.dch) == 1);
    CHECK(std::count(a.clusters[i].members.begin(), a.clusters[i].members.end(), h.rch) == 1);
    if (a.clusters[i].members.size() > 1) CHECK(h.dch != h.rch);
    if (h.rch == a.heads.pch) pch_is_rch = true;
  }
  CHECK(pch_is_rch);
}

}  // namespace

TEST_CASE("priya_classify examples") {
  CHECK(priya_classify(45, 30, 60) == ReadingClass::kNormal);
  CHECK(priya_classify(75, 30, 60) == ReadingClass::kCritical);
  CHECK(priya_classify(20, 30, 60) == ReadingClass::kSleep);
  CHECK(priya_classify(30, 30, 60) == ReadingClass::kNormal);
  CHECK(priya_classify(60, 30, 60) == ReadingClass::kNormal);
  CHECK(priya_classify(60.000001, 30, 60) == ReadingClass::kCritical);
}

TEST_CASE("setup picks DCH at the centre and RCH toward the BS") {
  Network net(at({{0, 0}, {5, 5}, {10, 10}}), {50, 50}, {}, 0.05);
  PriyaConfig cfg;
  cfg.num_clusters = 1;
  auto a = priya_setup(net, cfg, 1);
  REQUIRE(a.heads.per_cluster.size() == 1);
  CHECK(a.heads.per_cluster[0].dch == 1);
  CHECK(a.heads.per_cluster[0].rch == 2);
  CHECK(a.heads.pch == 2);
  CHECK(net.node(1).role == Role::kDCH);
  CHECK(net.node(2).role == Role::kPCH);
  CHECK(net.node(0).role == Role::kMember);
  CHECK(net.ledger().total(EnergyCause::kTxCtrl) > 0.0);
  CHECK(net.ledger().total(EnergyCause::kTxData) == 0.0);
  CHECK(a.schedules[0] == std::vector<SlotAssignment>{{0, 0}, {2, 1}});
}

TEST_CASE("single-node clusters make the node both heads") {
  Network net(at({{0, 0}, {90, 90}}), {50, 150}, {}, 0.05);
  PriyaConfig cfg;
  cfg.num_clusters = 2;
  auto a = priya_setup(net, cfg, 3);
  for (const auto& h : a.heads.per_cluster) CHECK(h.dch == h.rch);
  CHECK(a.heads.pch == 1);
}

TEST_CASE("setup rejects more clusters than alive nodes") {
  Network net(at({{0, 0}, {1, 1}}), {50, 150}, {}, 0.05);
  PriyaConfig cfg;
  cfg.num_clusters = 3;
  CHECK_THROWS_AS(priya_setup(net, cfg, 1), ConfigError);
}

TEST_CASE("steady round: sleep, critical shortcut and the normal ladder") {
  auto net = two_groups();
  PriyaConfig cfg;
  cfg.num_clusters = 2;
  auto a = priya_setup(net, cfg, 5);
  check_roles(net, a);
  const std::size_t near = cluster_of(a, 0), far = cluster_of(a, 4);
  REQUIRE(near != far);
  REQUIRE(a.heads.pch == a.heads.per_cluster[near].rch);
  const int far_dch = a.heads.per_cluster[far].dch;
  int sender = 4;
  while (sender == far_dch) ++sender;
  const double tau = tx_delay(2000, net.radio());

  std::vector<double> readings(8, 20.0);
  SUBCASE("all asleep") {
    const double before = net.ledger().total();
    auto ev = priya_steady_round(net, a, readings, cfg);
    CHECK(ev.packets.empty());
    CHECK(net.ledger().total() == before);
  }
  SUBCASE("one critical reading takes three hops") {
    for (int i = 4; i < 8; ++i) readings[static_cast<std::size_t>(i)] = 45.0;
    readings[static_cast<std::size_t>(sender)] = 75.0;
    auto ev = priya_steady_round(net, a, readings, cfg);
    CHECK(ev.bs_packets() == 1);
    const auto& p = ev.packets.back();
    CHECK(p.kind == PacketKind::kToBaseStation);
    CHECK(p.origin == sender);
    CHECK(p.from == a.heads.per_cluster[far].rch);
    CHECK(p.hops == 3);
    CHECK(p.critical);
    const int slot = *slot_of(a.schedules[far], sender);
    CHECK(p.delay == doctest::Approx(slot * tau + 3 * tau));
  }
  SUBCASE("normal readings climb through the PCH") {
    for (int i = 4; i < 8; ++i) readings[static_cast<std::size_t>(i)] = 45.0;
    readings[static_cast<std::size_t>(sender)] = 50.0;
    auto ev = priya_steady_round(net, a, readings, cfg);
    CHECK(ev.bs_packets() == 1);
    const auto& p = ev.packets.back();
    CHECK(p.from == a.heads.pch);
    CHECK(p.hops == 4);
    CHECK_FALSE(p.critical);
    const int slot = *slot_of(a.schedules[far], sender);
    CHECK(p.delay == doctest::Approx(slot * tau + 4 * tau));
  }
  SUBCASE("the PCH cluster goes straight up") {
    readings[1] = 45.0;
    auto ev = priya_steady_round(net, a, readings, cfg);
    REQUIRE(ev.bs_packets() == 1);
    CHECK(ev.packets.back().from == a.heads.pch);
    CHECK(ev.packets.back().hops <= 3);
  }
  SUBCASE("max aggregation keeps critical iff some input exceeded hi") {
    Rng rng(11);
    for (int r = 0; r < 200; ++r) {
      for (int i = 4; i < 8; ++i) readings[static_cast<std::size_t>(i)] = rng.uniform(25, 70);
      auto ev = priya_steady_round(net, a, readings, cfg);
      double mx = -1.0;
      for (int i = 4; i < 8; ++i)
        if (readings[static_cast<std::size_t>(i)] >= 30.0) mx = std::max(mx, readings[static_cast<std::size_t>(i)]);
      for (const auto& p : ev.packets)
        if (p.kind == PacketKind::kToBaseStation) CHECK(p.critical == (mx > 60.0));
    }
  }
}

TEST_CASE("rotation fires below 35% and not above") {
  auto net = two_groups();
  PriyaConfig cfg;
  cfg.num_clusters = 2;
  auto a = priya_setup(net, cfg, 5);
  const std::size_t far = cluster_of(a, 4);
  const auto old = a.heads.per_cluster[far];

  for (auto& h : a.heads.per_cluster) {
    net.node(h.dch).energy = 0.72;
    net.node(h.rch).energy = 0.72;
  }
  CHECK_FALSE(priya_maybe_rotate(net, a, cfg).has_value());
  CHECK(a.heads.per_cluster[far] == old);

  net.node(old.rch).energy = 0.68;
  auto rotated = priya_maybe_rotate(net, a, cfg);
  REQUIRE(rotated.has_value());
  const auto now = a.heads.per_cluster[far];
  CHECK(now.dch != old.dch);
  CHECK(now.rch != old.rch);
  CHECK(now.dch != now.rch);

  // Nearest eligible peer in the old heads' tables, lower id on ties.
  auto expect = [&](int from, std::initializer_list<int> excluded) {
    int best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int m : a.clusters[far].members) {
      if (std::find(excluded.begin(), excluded.end(), m) != excluded.end()) continue;
      if (net.node(m).energy_fraction() < 0.35) continue;
      const double d = net.node(from).known_distances.at(m);
      if (d < bd) {
        bd = d;
        best = m;
      }
    }
    return best;
  };
  CHECK(now.dch == expect(old.dch, {old.dch, old.rch}));
  CHECK(now.rch == expect(old.rch, {old.dch, old.rch, now.dch}));
  check_roles(net, a);
}

TEST_CASE("rotation in the PCH's cluster re-selects the PCH") {
  auto net = two_groups();
  PriyaConfig cfg;
  cfg.num_clusters = 2;
  auto a = priya_setup(net, cfg, 5);
  const std::size_t near = cluster_of(a, 0);
  const int old_pch = a.heads.pch;
  net.node(old_pch).energy = 0.6;
  REQUIRE(priya_maybe_rotate(net, a, cfg).has_value());
  CHECK(a.heads.pch != old_pch);
  int best = -1;
  double bd = std::numeric_limits<double>::infinity();
  for (const auto& h : a.heads.per_cluster)
    if (net.distance_to_bs(h.rch) < bd) {
      bd = net.distance_to_bs(h.rch);
      best = h.rch;
    }
  CHECK(a.heads.pch == best);
  CHECK(a.heads.pch == a.heads.per_cluster[near].rch);
  CHECK(net.node(old_pch).role == Role::kMember);
  check_roles(net, a);
}

TEST_CASE("a head with no usable peer keeps the role") {
  Network net(at({{0, 0}, {10, 0}}), {5, 100}, {}, 0.05);
  PriyaConfig cfg;
  cfg.num_clusters = 1;
  auto a = priya_setup(net, cfg, 1);
  net.node(0).energy = 0.5;
  net.node(1).energy = 0.5;
  CHECK_FALSE(priya_maybe_rotate(net, a, cfg).has_value());
}

TEST_CASE("protocol keeps role invariants over a long run") {
  Network net(deploy(60, 100, 100, 21), {50, 175}, {}, 0.05);
  PriyaProtocol proto(PriyaConfig{});
  Rng rng(4), field(5);
  proto.setup(net, rng);
  for (int r = 0; r < 3000 && net.alive_count() > 55; ++r) {
    net.set_round(r);
    std::vector<double> readings(60);
    for (auto& v : readings) v = field.uniform(0, 100);
    proto.steady_round(net, readings);
    if (proto.maybe_rotate(net, rng)) check_roles(net, proto.assignment());
  }
}
