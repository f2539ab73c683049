#include "wsnsim/sensing.hpp"

#include <cmath>
#include <string>

#include "wsnsim/errors.hpp"

namespace wsnsim {

void SensingConfig::validate(int node_count) const {
  switch (model) {
    case SensingModel::kUniform:
      if (!(lo <= hi)) throw ConfigError("sensing.lo must be <= sensing.hi");
      break;
    case SensingModel::kGaussian:
      if (!(stddev >= 0.0)) throw ConfigError("sensing.stddev must be >= 0");
      break;
    case SensingModel::kTrace:
      if (trace.empty()) throw ConfigError("sensing.trace must have at least one row");
      for (std::size_t r = 0; r < trace.size(); ++r)
        if (trace[r].size() != static_cast<std::size_t>(node_count))
          throw ConfigError("sensing.trace row " + std::to_string(r) + " has " +
                            std::to_string(trace[r].size()) + " values, expected " +
                            std::to_string(node_count));
      break;
  }
}

SensingField::SensingField(SensingConfig cfg, int node_count, std::uint64_t seed)
    : cfg_(std::move(cfg)), node_count_(node_count), rng_(seed) {}

std::vector<double> SensingField::draw(int round) {
  const auto n = static_cast<std::size_t>(node_count_);
  switch (cfg_.model) {
    case SensingModel::kTrace:
      return cfg_.trace[static_cast<std::size_t>(round) % cfg_.trace.size()];
    case SensingModel::kUniform: {
      std::vector<double> out(n);
      for (auto& v : out) v = rng_.uniform(cfg_.lo, cfg_.hi);
      return out;
    }
    case SensingModel::kGaussian: {
      std::vector<double> out(n);
      for (auto& v : out) v = rng_.normal(cfg_.mean, cfg_.stddev);
      return out;
    }
  }
  return std::vector<double>(n, 0.0);
}

}  // namespace wsnsim
