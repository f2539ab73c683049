#pragma once

#include <cstdint>
#include <random>

namespace wsnsim {

/// Independent random streams derived from one scenario seed.
///
/// Topology and sensing streams do not depend on the protocol under test, so
/// runs that share a seed see the same layout and the same readings.
enum class Stream : std::uint64_t {
  kTopology = 1,
  kSensing = 2,
  kProtocol = 3,
};

/// SplitMix64 finalizer over (base, stream).
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream);

inline std::uint64_t stream_seed(std::uint64_t base, Stream stream) {
  return stream_seed(base, static_cast<std::uint64_t>(stream));
}

/// Seeded generator whose derived variates are identical on every platform.
///
/// The std:: distributions are implementation-defined, so uniform, index and
/// normal draws are computed from raw mt19937_64 output here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform in [0, n). Rejection sampling, no modulo bias. n must be > 0.
  std::uint64_t index(std::uint64_t n);

  /// Box-Muller; one fresh pair of uniforms per call.
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

}  // namespace wsnsim
