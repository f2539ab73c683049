#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/rng.hpp"

namespace wsnsim {

enum class SensingModel { kUniform, kGaussian, kTrace };

struct SensingConfig {
  SensingModel model = SensingModel::kUniform;
  double lo = 0.0;  // uniform bounds
  double hi = 100.0;
  double mean = 45.0;  // gaussian
  double stddev = 15.0;
  /// trace[round][node]; rounds past the end wrap around.
  std::vector<std::vector<double>> trace;

  void validate(int node_count) const;
  bool operator==(const SensingConfig&) const = default;
};

/// Per-round readings for every node, dead or alive, so that protocols run
/// under the same seed consume identical streams.
class SensingField {
 public:
  SensingField(SensingConfig cfg, int node_count, std::uint64_t seed);

  std::vector<double> draw(int round);

 private:
  SensingConfig cfg_;
  int node_count_;
  Rng rng_;
};

}  // namespace wsnsim
