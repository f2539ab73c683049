#include <doctest.h>

#include <map>
#include <set>

#include "wsnsim/baselines.hpp"
#include "wsnsim/errors.hpp"

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

Network net_of(std::vector<Node> nodes) { return Network(std::move(nodes), {50, 175}, {}, 0.05); }

// One cluster headed by node 0 over every node.
struct OneCluster {
  std::vector<Cluster> clusters;
  std::vector<std::vector<SlotAssignment>> schedules;
};

OneCluster one_cluster(int n) {
  OneCluster oc;
  Cluster c;
  c.heads = {0};
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    c.members.push_back(i);
    if (i > 0) rest.push_back(i);
  }
  oc.clusters.push_back(c);
  oc.schedules.push_back(tdma_slots(rest));
  return oc;
}

}  // namespace

TEST_CASE("leach_threshold examples") {
  CHECK(leach_threshold(0.05, 0, true) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(leach_threshold(0.05, 19, true) == 1.0);
  CHECK(leach_threshold(0.05, 39, true) == 1.0);
  CHECK(leach_threshold(0.05, 7, false) == 0.0);
  CHECK(leach_threshold(1.0, 0, false) == 0.0);
  CHECK(leach_threshold(1.0, 0, true) == 1.0);
}

TEST_CASE("leach_threshold stays in [0,1] and rises within an epoch") {
  for (double p : {0.01, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0}) {
    const long epoch = std::lround(1.0 / p);
    double prev = 0.0;
    for (long r = 0; r < 3 * epoch; ++r) {
      const double t = leach_threshold(p, r, true);
      CHECK(t >= 0.0);
      CHECK(t <= 1.0);
      if (r % epoch != 0) CHECK(t >= prev);
      prev = t;
    }
  }
}

TEST_CASE("leach_elect with p=1 elects everyone alive") {
  auto nodes = deploy(12, 100, 100, 5);
  nodes[4].alive = false;
  LeachState st;
  Rng rng(1);
  auto e = leach_elect(nodes, st, 1.0, 0, rng);
  CHECK(e.size() == 11);
  CHECK(std::find(e.begin(), e.end(), 4) == e.end());
}

TEST_CASE("leach epochs: no repeats, last round elects all of G") {
  auto nodes = deploy(100, 100, 100, 9);
  LeachState st;
  Rng rng(42);
  for (int epoch = 0; epoch < 3; ++epoch) {
    std::set<int> seen;
    for (long i = 0; i < 20; ++i) {
      const long r = epoch * 20 + i;
      const auto before = st.g_set;
      auto e = leach_elect(nodes, st, 0.05, r, rng);
      CHECK_FALSE(e.empty());
      for (int id : e) {
        CHECK(seen.insert(id).second);
        CHECK_FALSE(st.g_set.contains(id));
      }
      if (i == 19) {
        CHECK(std::set<int>(e.begin(), e.end()) == before);
        CHECK(st.g_set.empty());
      }
    }
    CHECK(seen.size() == 100);
  }
}

TEST_CASE("leach_elect restarts G when deaths empty it") {
  auto nodes = deploy(4, 100, 100, 3);
  LeachState st;
  st.g_set = {2};
  nodes[2].alive = false;
  Rng rng(7);
  auto e = leach_elect(nodes, st, 0.25, 1, rng);
  CHECK_FALSE(e.empty());
  for (int id : e) CHECK(id != 2);
}

TEST_CASE("leach_join examples") {
  SUBCASE("one CH takes everyone") {
    auto net = net_of(at({{0, 0}, {10, 0}, {20, 5}, {3, 30}}));
    std::vector<int> ch{2};
    auto c = leach_join(net, ch);
    REQUIRE(c.size() == 1);
    CHECK(c[0].members == std::vector<int>{0, 1, 2, 3});
    CHECK(net.node(2).role == Role::kCH);
  }
  SUBCASE("tie goes to the lower CH id") {
    auto net = net_of(at({{50, 50}, {60, 60}, {70, 70}, {0, 0}, {80, 80}, {90, 90}, {95, 95}, {10, 0}, {5, 0}}));
    std::vector<int> ch{7, 3};
    auto c = leach_join(net, ch);
    REQUIRE(c.size() == 2);
    CHECK(c[0].heads.front() == 3);
    CHECK(std::count(c[0].members.begin(), c[0].members.end(), 8) == 1);
  }
  SUBCASE("nearest CH") {
    auto net = net_of(at({{0, 0}, {10, 0}, {1, 0}, {9, 0}}));
    std::vector<int> ch{2, 3};
    auto c = leach_join(net, ch);
    CHECK(c[0].members == std::vector<int>{0, 2});
    CHECK(c[1].members == std::vector<int>{1, 3});
  }
  SUBCASE("control traffic is charged") {
    auto net = net_of(at({{0, 0}, {10, 0}, {1, 0}, {9, 0}}));
    std::vector<int> ch{2, 3};
    leach_join(net, ch);
    CHECK(net.ledger().total(EnergyCause::kTxCtrl) > 0.0);
    CHECK(net.ledger().total(EnergyCause::kRx) > 0.0);
    CHECK(net.ledger().total(EnergyCause::kTxData) == 0.0);
  }
}

TEST_CASE("teen gate examples") {
  TeenConfig cfg{50, 2};
  CHECK_FALSE(teen_should_transmit(49, std::nullopt, cfg));
  CHECK(teen_should_transmit(55, std::nullopt, cfg));
  CHECK_FALSE(teen_should_transmit(56, 55.0, cfg));
  CHECK(teen_should_transmit(58, 55.0, cfg));
  CHECK_FALSE(teen_should_transmit(50, std::nullopt, cfg));
}

TEST_CASE("apteen gate examples") {
  ApteenConfig cfg;
  cfg.hard_threshold = 50;
  cfg.soft_threshold = 2;
  cfg.count_time = 5;
  CHECK(apteen_should_transmit(56, 55.0, 5, cfg));
  CHECK_FALSE(apteen_should_transmit(56, 55.0, 2, cfg));
  CHECK(apteen_should_transmit(58, 55.0, 0, cfg));
}

TEST_CASE("apteen gate includes teen gate") {
  ApteenConfig a;
  a.hard_threshold = 50;
  TeenConfig t = a.thresholds();
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const double v = rng.uniform(0, 100);
    std::optional<double> last;
    if (rng.uniform01() < 0.7) last = rng.uniform(0, 100);
    const int since = static_cast<int>(rng.index(10));
    if (teen_should_transmit(v, last, t)) CHECK(apteen_should_transmit(v, last, since, a));
  }
}

TEST_CASE("leach steady round: m member packets and one BS packet") {
  auto net = net_of(deploy(8, 100, 100, 2));
  auto oc = one_cluster(8);
  std::vector<double> readings(8, 10.0);
  auto ev = baseline_steady_round(net, oc.clusters, oc.schedules, readings, {BaselineVariant::kLeach});
  CHECK(ev.ch_packets() == 7);
  CHECK(ev.bs_packets() == 1);
}

TEST_CASE("teen below HT is silent") {
  auto net = net_of(deploy(8, 100, 100, 2));
  auto oc = one_cluster(8);
  std::vector<double> readings(8, 20.0);
  BaselineGate g{BaselineVariant::kTeen, {50, 2}, {}};
  for (int r = 0; r < 10; ++r) {
    auto ev = baseline_steady_round(net, oc.clusters, oc.schedules, readings, g);
    CHECK(ev.packets.empty());
  }
  CHECK(net.ledger().total(EnergyCause::kTxData) == 0.0);
}

TEST_CASE("apteen constant supra-HT reading transmits every CT rounds") {
  auto net = net_of(deploy(6, 100, 100, 2));
  auto oc = one_cluster(6);
  std::vector<double> readings(6, 70.0);
  ApteenConfig a;
  a.hard_threshold = 50;
  a.count_time = 5;
  BaselineGate g{BaselineVariant::kApteen, a.thresholds(), a};
  std::map<int, std::vector<int>> sent;
  for (int r = 0; r < 16; ++r) {
    auto ev = baseline_steady_round(net, oc.clusters, oc.schedules, readings, g);
    for (const auto& p : ev.packets)
      if (p.kind == PacketKind::kMemberToHead) sent[p.origin].push_back(r);
  }
  REQUIRE(sent.size() == 5);
  for (auto& [id, rounds] : sent) CHECK(rounds == std::vector<int>{0, 5, 10, 15});
}

TEST_CASE("teen sends once per setup period under a constant supra-HT reading") {
  auto net = net_of(deploy(10, 100, 100, 4));
  BaselineProtocol proto(BaselineVariant::kTeen, {0.2, 5}, {50, 2});
  Rng rng(8);
  proto.setup(net, rng);
  std::vector<double> readings(10, 80.0);
  for (int period = 0; period < 4; ++period) {
    std::map<int, int> sent;
    std::set<int> heads(proto.cluster_heads().begin(), proto.cluster_heads().end());
    long bs = 0;
    for (int r = 0; r < 5; ++r) {
      net.set_round(period * 5 + r);
      auto ev = proto.steady_round(net, readings);
      for (const auto& p : ev.packets)
        if (p.kind == PacketKind::kMemberToHead) ++sent[p.origin];
      bs += ev.bs_packets();
      CHECK(proto.maybe_rotate(net, rng) == (r == 4));
    }
    CHECK(bs == static_cast<long>(heads.size()));
    for (int id = 0; id < 10; ++id) CHECK(sent[id] == (heads.contains(id) ? 0 : 1));
  }
}

TEST_CASE("threshold protocols never out-send LEACH under equal inputs") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto nodes = deploy(30, 100, 100, seed);
    auto base = net_of(nodes);
    LeachState st;
    Rng rng(seed);
    auto e = leach_elect(base.nodes(), st, 0.1, 0, rng);
    auto clusters = leach_join(base, e);
    std::vector<std::vector<SlotAssignment>> sched;
    for (const auto& c : clusters) {
      std::vector<int> rest;
      for (int id : c.members)
        if (id != c.heads.front()) rest.push_back(id);
      sched.push_back(tdma_slots(rest));
    }
    Network leach = base, teen = base, apteen = base;
    ApteenConfig a;
    BaselineGate gl{BaselineVariant::kLeach}, gt{BaselineVariant::kTeen, a.thresholds(), a},
        ga{BaselineVariant::kApteen, a.thresholds(), a};
    Rng field(seed + 100);
    long bl = 0, bt = 0, ba = 0;
    for (int r = 0; r < 40; ++r) {
      std::vector<double> readings(30);
      for (auto& v : readings) v = field.uniform(0, 100);
      bl += baseline_steady_round(leach, clusters, sched, readings, gl).bs_packets();
      bt += baseline_steady_round(teen, clusters, sched, readings, gt).bs_packets();
      ba += baseline_steady_round(apteen, clusters, sched, readings, ga).bs_packets();
    }
    CHECK(bt <= bl);
    CHECK(ba <= bl);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS((LeachConfig{0.0, 20}.validate()), ConfigError);
  CHECK_THROWS_AS((LeachConfig{0.05, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((TeenConfig{50, -1}.validate()), ConfigError);
  ApteenConfig a;
  a.count_time = 0;
  CHECK_THROWS_AS(a.validate(), ConfigError);
  CHECK_THROWS_WITH_AS(parse_protocol("pegasis"), doctest::Contains("unsupported protocol"), ConfigError);
  CHECK(parse_protocol("apteen") == ProtocolKind::kApteen);
}
