#include "wsnsim/tdma.hpp"

#include <algorithm>

namespace wsnsim {

std::vector<SlotAssignment> tdma_slots(std::span<const int> members) {
  std::vector<int> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<SlotAssignment> out;
  out.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) out.push_back({sorted[i], static_cast<int>(i)});
  return out;
}

std::optional<int> slot_of(std::span<const SlotAssignment> schedule, int node_id) {
  for (const auto& s : schedule)
    if (s.node_id == node_id) return s.slot;
  return std::nullopt;
}

}  // namespace wsnsim
