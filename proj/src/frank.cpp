#include "sysrisk/frank.hpp"

#include <cmath>
#include <stdexcept>

namespace sysrisk {

namespace {

void check_copula(const FrankCopula& c) {
  if (!(c.theta > 0.0) || !std::isfinite(c.theta))
    throw std::domain_error("FrankCopula: theta must be finite and > 0");
  if (c.dim < 1) throw std::domain_error("FrankCopula: dim must be >= 1");
}

// log(1 - e^{-a}) for a > 0 without cancellation on either side of ln 2.
double log1mexp(double a) {
  return a >= 0.6931471805599453 ? std::log1p(-std::exp(-a)) : std::log(-std::expm1(-a));
}

}  // namespace

double frank_generator_inverse(double s, double theta) {
  if (!(s >= 0.0)) throw std::domain_error("frank_generator_inverse: s must be >= 0");
  // 1 - (1-e^-theta) e^-s, with a log1p branch while the subtracted term is
  // small and the exact two-term form -expm1(-s) + e^{-theta-s} otherwise.
  double ce = -std::expm1(-theta) * std::exp(-s);
  double logw = ce <= 0.5 ? std::log1p(-ce) : std::log(-std::expm1(-s) + std::exp(-theta - s));
  return -logw / theta;
}

double FrankCopula::cdf(std::span<const double> u) const {
  check_copula(*this);
  if (u.size() != dim) throw std::domain_error("FrankCopula::cdf: wrong dimension");
  double log_num = 0.0;
  for (double ui : u) {
    if (!(ui >= 0.0 && ui <= 1.0)) throw std::domain_error("FrankCopula::cdf: u outside [0,1]");
    if (ui == 0.0) return 0.0;
    log_num += log1mexp(theta * ui);
  }
  double log_den = static_cast<double>(dim - 1) * log1mexp(theta);
  // With s = log r <= 0 and r = prod/(1-e^{-theta})^{d-1} in (0, 1],
  // C = -(1/theta) log(1 - r) = -(1/theta) log(-expm1(s)); going through
  // expm1 keeps 1 - r when r is within an ulp of 1 (large theta, u near 1).
  double s = std::min(log_num - log_den, 0.0);
  if (s == 0.0) return 1.0;
  return -std::log(-std::expm1(s)) / theta;
}

void FrankCopula::sample(RngStream& rng, std::span<double> out) const {
  check_copula(*this);
  if (out.size() != dim) throw std::domain_error("FrankCopula::sample: wrong dimension");
  // 1 - e^{-theta} rounds to 1 for theta >= 38; keep the frailty parameter
  // inside the open interval (error ~1e-16 in the sampled law).
  double p = -std::expm1(-theta);
  if (p >= 1.0) p = std::nextafter(1.0, 0.0);
  double v = static_cast<double>(rng.logarithmic(p));
  for (double& o : out) o = frank_generator_inverse(rng.exponential() / v, theta);
}

std::vector<double> FrankCopula::sample(RngStream& rng) const {
  std::vector<double> out(dim);
  sample(rng, std::span<double>(out));
  return out;
}

}  // namespace sysrisk
