#pragma once

#include <cstdint>
#include <random>

namespace sysrisk {

// Counter-addressable random stream: stream i of a given seed always yields
// the same draws, independent of how many other streams were consumed.
// All variate transforms are pinned here (no std::*_distribution) so results
// are bit-identical across standard library implementations.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01();
  // Uniform on (0, 1), strictly interior.
  double uniform_open01();
  // Exp(1) by inversion.
  double exponential();
  // Box-Muller (cosine branch).
  double normal(double mean, double stddev);
  // Count by exponential spacings; exact for the moderate means used here.
  std::uint64_t poisson(double mean);
  // Logarithmic series on {1,2,...} with parameter p in (0,1); Kemp's method.
  std::uint64_t logarithmic(double p);

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sysrisk
