#include "wsnsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wsnsim/errors.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

namespace {

constexpr int kMaxLloydIterations = 200;

double squared(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

std::vector<Node> deploy(int n, double width, double height, std::uint64_t seed,
                         double initial_energy) {
  if (n < 0) throw ConfigError("nodes must be >= 0");
  if (!(width > 0.0) || !(height > 0.0)) throw ConfigError("region dimensions must be > 0");
  Rng rng(seed);
  std::vector<Node> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Node& node = nodes[static_cast<std::size_t>(i)];
    node.id = i;
    node.pos.x = rng.uniform(0.0, width);
    node.pos.y = rng.uniform(0.0, height);
    node.energy = initial_energy;
    node.initial_energy = initial_energy;
  }
  return nodes;
}

double distance(const Position& a, const Position& b) { return std::hypot(a.x - b.x, a.y - b.y); }

Position centroid(std::span<const Position> members) {
  if (members.empty()) throw std::logic_error("centroid of an empty set");
  double sx = 0.0;
  double sy = 0.0;
  for (const auto& p : members) {
    sx += p.x;
    sy += p.y;
  }
  const auto n = static_cast<double>(members.size());
  return {sx / n, sy / n};
}

double within_cluster_sse(std::span<const Node> nodes, std::span<const Cluster> clusters) {
  double sse = 0.0;
  for (const auto& c : clusters)
    for (int id : c.members) sse += squared(nodes[static_cast<std::size_t>(id)].pos, c.centroid);
  return sse;
}

PartitionTrace partition_traced(std::span<const Node> nodes, int k, std::uint64_t seed) {
  std::vector<int> alive;
  for (const auto& n : nodes)
    if (n.alive) alive.push_back(n.id);
  if (k <= 0) throw ConfigError("priya.clusters must be > 0");
  if (static_cast<std::size_t>(k) > alive.size())
    throw ConfigError("priya.clusters (" + std::to_string(k) + ") exceeds alive node count (" +
                      std::to_string(alive.size()) + ")");

  const std::size_t m = alive.size();
  const auto kk = static_cast<std::size_t>(k);
  auto pos = [&](std::size_t i) -> const Position& {
    return nodes[static_cast<std::size_t>(alive[i])].pos;
  };

  // k distinct seeds by partial Fisher-Yates over the alive list.
  std::vector<std::size_t> pool(m);
  for (std::size_t i = 0; i < m; ++i) pool[i] = i;
  Rng rng(seed);
  for (std::size_t i = 0; i < kk; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.index(m - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<Position> centers(kk);
  for (std::size_t c = 0; c < kk; ++c) centers[c] = pos(pool[c]);

  std::vector<std::size_t> label(m, kk);
  PartitionTrace trace;

  auto sse_now = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += squared(pos(i), centers[label[i]]);
    return s;
  };

  for (int iter = 0; iter < kMaxLloydIterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < kk; ++c) {
        const double d = squared(pos(i), centers[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (label[i] != best) {
        label[i] = best;
        changed = true;
      }
    }

    // Empty-cluster repair: the node farthest from its centroid (taken from a
    // cluster with more than one member) moves into the empty cluster.
    std::vector<std::size_t> sizes(kk, 0);
    for (auto l : label) ++sizes[l];
    for (std::size_t c = 0; c < kk; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t far = m;
      double far_d = -1.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (sizes[label[i]] < 2) continue;
        const double d = squared(pos(i), centers[label[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      --sizes[label[far]];
      label[far] = c;
      ++sizes[c];
      centers[c] = pos(far);
      changed = true;
    }

    std::vector<double> sx(kk, 0.0), sy(kk, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      sx[label[i]] += pos(i).x;
      sy[label[i]] += pos(i).y;
    }
    for (std::size_t c = 0; c < kk; ++c) {
      const auto n = static_cast<double>(sizes[c]);
      centers[c] = {sx[c] / n, sy[c] / n};
    }
    trace.sse.push_back(sse_now());
    trace.iterations = iter + 1;
    if (!changed) break;
  }

  std::vector<Cluster> clusters(kk);
  for (std::size_t i = 0; i < m; ++i) clusters[label[i]].members.push_back(alive[i]);
  for (std::size_t c = 0; c < kk; ++c) clusters[c].centroid = centers[c];
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) { return a.members.front() < b.members.front(); });
  for (std::size_t c = 0; c < kk; ++c) clusters[c].id = static_cast<int>(c);
  trace.clusters = std::move(clusters);
  return trace;
}

std::vector<Cluster> partition(std::span<const Node> nodes, int k, std::uint64_t seed) {
  return partition_traced(nodes, k, seed).clusters;
}

}  // namespace wsnsim
