#pragma once

#include <optional>
#include <span>
#include <vector>

namespace wsnsim {

struct SlotAssignment {
  int node_id = 0;
  int slot = 0;

  bool operator==(const SlotAssignment&) const = default;
};

/// Members sorted by id get slots 0..m-1. Callers drop dead members before
/// re-issuing.
std::vector<SlotAssignment> tdma_slots(std::span<const int> members);

std::optional<int> slot_of(std::span<const SlotAssignment> schedule, int node_id);

}  // namespace wsnsim
