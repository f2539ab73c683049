#pragma once

#include <map>
#include <optional>

namespace wsnsim {

struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

enum class Role { kMember, kCH, kDCH, kRCH, kPCH };

const char* role_name(Role role);

/// One sensor node. Ids equal the node's index in the network.
struct Node {
  int id = 0;
  Position pos;
  double energy = 0.0;
  double initial_energy = 0.0;
  bool alive = true;
  Role role = Role::kMember;
  std::optional<int> cluster_id;
  // TEEN/APTEEN gate state
  std::optional<double> last_sent_value;
  int rounds_since_tx = 0;
  /// Peers this node has exchanged at least one frame with.
  std::map<int, double> known_distances;

  double energy_fraction() const { return initial_energy > 0.0 ? energy / initial_energy : 0.0; }
};

}  // namespace wsnsim
