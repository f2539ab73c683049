#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wsnsim/protocol.hpp"
#include "wsnsim/tdma.hpp"

namespace wsnsim {

struct PriyaConfig {
  int num_clusters = 5;
  double range_lo = 30.0;
  double range_hi = 60.0;
  double ch_min_energy_frac = 0.35;

  void validate() const;
  bool operator==(const PriyaConfig&) const = default;
};

enum class ReadingClass { kSleep, kNormal, kCritical };

const char* reading_class_name(ReadingClass c);

/// Below lo sleeps, above hi is critical, [lo, hi] inclusive is normal.
ReadingClass priya_classify(double value, double lo, double hi);

struct ClusterHeads {
  int dch = 0;
  int rch = 0;

  bool operator==(const ClusterHeads&) const = default;
};

struct PriyaHeads {
  std::vector<ClusterHeads> per_cluster;  // indexed like the clusters
  int pch = 0;

  bool operator==(const PriyaHeads&) const = default;
};

/// Cluster layout, head roles and the per-cluster TDMA schedules.
struct PriyaAssignment {
  std::vector<Cluster> clusters;
  PriyaHeads heads;
  std::vector<std::vector<SlotAssignment>> schedules;
};

/// BS-side head choice for fixed clusters. DCH is the alive member nearest
/// the centroid; RCH is the alive member nearest the BS, other than the DCH
/// unless the cluster has a single alive node; PCH is the RCH nearest the BS.
/// Ties go to the lower id.
PriyaHeads priya_select_heads(std::span<const Node> nodes, std::span<const Cluster> clusters,
                              const Position& bs);

/// Partition, head selection, BS notifications, head announcements and the
/// TDMA schedule. Throws ConfigError if fewer alive nodes than clusters.
PriyaAssignment priya_setup(Network& net, const PriyaConfig& cfg, std::uint64_t seed);

/// Sleep members stay silent; others report to the DCH, which forwards the
/// max of its inputs to the RCH. Critical aggregates go RCH->BS directly,
/// normal ones RCH->PCH->BS (or straight to the BS from the PCH's own cluster).
RoundEvents priya_steady_round(Network& net, const PriyaAssignment& assignment,
                               std::span<const double> readings, const PriyaConfig& cfg);

/// Rotates both heads of every cluster where a head is dead or below the CH
/// energy fraction. Successors are the nearest peers in the old head's
/// known-distance table, preferring peers that still meet the CH energy
/// fraction. Returns the new heads when anything changed.
std::optional<PriyaHeads> priya_maybe_rotate(Network& net, PriyaAssignment& assignment,
                                             const PriyaConfig& cfg);

class PriyaProtocol final : public Protocol {
 public:
  explicit PriyaProtocol(PriyaConfig cfg) : cfg_(cfg) {}

  ProtocolKind kind() const override { return ProtocolKind::kPriya; }
  void setup(Network& net, Rng& rng) override;
  RoundEvents steady_round(Network& net, std::span<const double> readings) override;
  bool maybe_rotate(Network& net, Rng& rng) override;
  const std::vector<Cluster>& clusters() const override { return assignment_.clusters; }

  const PriyaAssignment& assignment() const { return assignment_; }
  const PriyaConfig& config() const { return cfg_; }

 private:
  PriyaConfig cfg_;
  PriyaAssignment assignment_;
};

}  // namespace wsnsim
