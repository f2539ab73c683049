#include "wsnsim/protocol.hpp"

#include <algorithm>
#include <string>

#include "wsnsim/errors.hpp"

namespace wsnsim {

std::string_view protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kPriya: return "priya";
    case ProtocolKind::kLeach: return "leach";
    case ProtocolKind::kTeen: return "teen";
    case ProtocolKind::kApteen: return "apteen";
  }
  return "?";
}

ProtocolKind parse_protocol(std::string_view name) {
  for (auto k : {ProtocolKind::kPriya, ProtocolKind::kLeach, ProtocolKind::kTeen,
                 ProtocolKind::kApteen})
    if (protocol_name(k) == name) return k;
  throw ConfigError("unsupported protocol '" + std::string(name) + "'");
}

long RoundEvents::count(PacketKind kind) const {
  return static_cast<long>(std::count_if(packets.begin(), packets.end(),
                                         [kind](const PacketRecord& p) { return p.kind == kind; }));
}

}  // namespace wsnsim
