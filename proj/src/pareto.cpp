#include "sysrisk/pareto.hpp"

#include <cmath>
#include <stdexcept>

namespace sysrisk {

namespace {

void check_spec(const TailSpec& spec) {
  if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma))
    throw std::domain_error("TailSpec: gamma must be finite and > 0");
  if (!(spec.alpha > 0.0) || !std::isfinite(spec.alpha))
    throw std::domain_error("TailSpec: alpha must be finite and > 0");
}

}  // namespace

double tail(const TailSpec& spec, double x) {
  check_spec(spec);
  if (!(x >= 0.0)) throw std::domain_error("tail: x must be >= 0");
  // log survival = -alpha * log1p(x / gamma)
  return std::exp(-spec.alpha * std::log1p(x / spec.gamma));
}

double quantile(const TailSpec& spec, double q) {
  check_spec(spec);
  if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("quantile: q must be in [0,1)");
  // (1-q)^{-1/alpha} - 1 = expm1(-log1p(-q) / alpha)
  return spec.gamma * std::expm1(-std::log1p(-q) / spec.alpha);
}

double equivalence_ratio(const TailSpec& spec, const TailSpec& reference) {
  check_spec(spec);
  check_spec(reference);
  if (spec.alpha != reference.alpha)
    throw std::domain_error("equivalence_ratio: tail indices differ; ratio is degenerate");
  return std::exp(spec.alpha * (std::log(spec.gamma) - std::log(reference.gamma)));
}

double pareto_mean(const TailSpec& spec) {
  check_spec(spec);
  if (!(spec.alpha > 1.0)) throw std::domain_error("pareto_mean: requires alpha > 1");
  return spec.gamma / (spec.alpha - 1.0);
}

}  // namespace sysrisk
