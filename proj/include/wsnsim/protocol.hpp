#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "wsnsim/network.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

enum class ProtocolKind { kPriya, kLeach, kTeen, kApteen };

std::string_view protocol_name(ProtocolKind kind);

/// Throws ConfigError("unsupported protocol ...") for anything else.
ProtocolKind parse_protocol(std::string_view name);

enum class PacketKind {
  kMemberToHead,  // sensed reading into a CH/DCH
  kHeadToHead,    // DCH->RCH, RCH->PCH
  kToBaseStation,
};

/// One delivered data frame.
struct PacketRecord {
  int origin = 0;  // node whose reading the frame carries
  int from = 0;
  int to = kBaseStation;
  PacketKind kind = PacketKind::kMemberToHead;
  int hops = 0;        // hops travelled from the origin, this one included
  double delay = 0.0;  // slot wait + serialization along the path, seconds
  double value = 0.0;
  bool critical = false;
};

struct RoundEvents {
  std::vector<PacketRecord> packets;

  long count(PacketKind kind) const;
  long ch_packets() const { return count(PacketKind::kMemberToHead); }
  long bs_packets() const { return count(PacketKind::kToBaseStation); }
};

/// Behaviour shared by all four protocols, driven round by round by the engine.
class Protocol {
 public:
  virtual ~Protocol() = default;

  virtual ProtocolKind kind() const = 0;

  /// Initial cluster formation and head assignment. Control traffic is
  /// charged to the network.
  virtual void setup(Network& net, Rng& rng) = 0;

  /// One sense-and-report round. Never touches dead nodes.
  virtual RoundEvents steady_round(Network& net, std::span<const double> readings) = 0;

  /// End-of-round head rotation or periodic re-setup. Returns true when the
  /// head assignment changed.
  virtual bool maybe_rotate(Network& net, Rng& rng) = 0;

  virtual const std::vector<Cluster>& clusters() const = 0;
};

}  // namespace wsnsim
