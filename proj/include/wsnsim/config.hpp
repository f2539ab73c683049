#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wsnsim/engine.hpp"

namespace wsnsim {

/// A scenario template run for every (protocol, seed) pair.
struct ExperimentSpec {
  Scenario scenario;
  std::vector<ProtocolKind> protocols{ProtocolKind::kPriya, ProtocolKind::kLeach,
                                      ProtocolKind::kTeen, ProtocolKind::kApteen};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::string out_dir = "out";

  void validate() const;
  bool operator==(const ExperimentSpec&) const = default;
};

/// Parses the flat `key = value` format (see docs/config.md). Unset keys keep
/// their defaults. Throws ConfigError naming the key on any bad entry.
ExperimentSpec parse_config_text(std::string_view text);

/// Reads and parses a file. Throws IoError if it cannot be read.
ExperimentSpec parse_config(const std::filesystem::path& path);

/// Canonical text form; parse_config_text(emit_config(s)) == s.
std::string emit_config(const ExperimentSpec& spec);

}  // namespace wsnsim
