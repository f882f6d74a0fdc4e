#include "sysrisk/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace sysrisk {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0xa0761d6478bd642fULL * (stream + 1));
  std::seed_seq seq{
      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s))};
  gen_.seed(seq);
}

double RngStream::uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

double RngStream::uniform_open01() { return ((gen_() >> 11) + 0.5) * 0x1.0p-53; }

double RngStream::exponential() { return -std::log(uniform_open01()); }

double RngStream::normal(double mean, double stddev) {
  double u1 = uniform_open01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
}

std::uint64_t RngStream::poisson(double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  std::uint64_t k = 0;
  double s = exponential();
  while (s <= mean) {
    ++k;
    s += exponential();
  }
  return k;
}

std::uint64_t RngStream::logarithmic(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("logarithmic: p must be in (0,1)");
  double u2 = uniform_open01();
  if (u2 > p) return 1;
  double u1 = uniform_open01();
  double q = -std::expm1(u1 * std::log1p(-p));
  if (u2 < q * q) {
    double n = std::floor(1.0 + std::log(u2) / std::log(q));
    return n < 1.0 ? 1 : static_cast<std::uint64_t>(n);
  }
  return u2 > q ? 1 : 2;
}

}  // namespace sysrisk
