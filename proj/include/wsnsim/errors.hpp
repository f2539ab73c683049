#pragma once

#include <stdexcept>
#include <string>

namespace wsnsim {

/// Invalid scenario or experiment configuration. Messages name the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure reading configuration or writing experiment output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsnsim
