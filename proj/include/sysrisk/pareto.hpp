#pragma once

namespace sysrisk {

// Pareto(II) tail with survival function (gamma / (gamma + x))^alpha, x >= 0.
struct TailSpec {
  double gamma;  // scale, > 0
  double alpha;  // tail index, > 0
};

// Survival probability P(X > x). Evaluated in the log domain so that
// extreme quantile levels stay accurate. Throws std::domain_error for x < 0
// or an invalid spec.
double tail(const TailSpec& spec, double x);

// Quantile F^{-1}(q) = gamma * ((1-q)^{-1/alpha} - 1) for q in [0, 1).
// Uses expm1/log1p so q near 1 keeps full relative precision.
double quantile(const TailSpec& spec, double q);

// Limit of tail(spec, x) / tail(reference, x) as x -> infinity, i.e.
// (spec.gamma / reference.gamma)^alpha. Requires equal alpha.
double equivalence_ratio(const TailSpec& spec, const TailSpec& reference);

// Mean gamma / (alpha - 1); requires alpha > 1.
double pareto_mean(const TailSpec& spec);

}  // namespace sysrisk
