#include "wsnsim/node.hpp"

namespace wsnsim {

const char* role_name(Role role) {
  switch (role) {
    case Role::kMember: return "member";
    case Role::kCH: return "ch";
    case Role::kDCH: return "dch";
    case Role::kRCH: return "rch";
    case Role::kPCH: return "pch";
  }
  return "?";
}

}  // namespace wsnsim
