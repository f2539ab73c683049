#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsnsim/node.hpp"

namespace wsnsim {

/// A group of nodes reporting through the same head(s).
struct Cluster {
  int id = 0;
  std::vector<int> members;  // ascending ids, heads included
  Position centroid;
  std::vector<int> heads;  // {ch} for the baselines, {dch, rch} for PRIYA

  bool operator==(const Cluster&) const = default;
};

/// n nodes uniform over [0,width]x[0,height], full energy, role Member.
std::vector<Node> deploy(int n, double width, double height, std::uint64_t seed,
                         double initial_energy = 2.0);

double distance(const Position& a, const Position& b);

/// Arithmetic mean. Throws std::logic_error on an empty list.
Position centroid(std::span<const Position> members);

struct PartitionTrace {
  std::vector<Cluster> clusters;
  /// Within-cluster SSE after initialization and after every Lloyd iteration.
  std::vector<double> sse;
  int iterations = 0;
};

/// Proximity partition of the alive nodes into k clusters (Lloyd iteration
/// from k seeded distinct nodes). Clusters are ordered by smallest member id
/// and numbered 0..k-1. Throws ConfigError if k is 0 or exceeds the alive count.
std::vector<Cluster> partition(std::span<const Node> nodes, int k, std::uint64_t seed);

PartitionTrace partition_traced(std::span<const Node> nodes, int k, std::uint64_t seed);

/// Sum of squared member distances to their cluster centroid.
double within_cluster_sse(std::span<const Node> nodes, std::span<const Cluster> clusters);

}  // namespace wsnsim
