#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sysrisk/rng.hpp"

namespace sysrisk {

// Discount processes R_s. Laplace exponents phi(a) = log E[e^{-a R_1}]:
//   linear drift R_s = delta s:         phi(a) = -a delta
//   Brownian R_s = mu s + sigma W_s:    phi(a) = -a mu + a^2 sigma^2 / 2
struct LinearDrift {
  double delta;  // > 0
};
struct BrownianDrift {
  double mu;     // > 0
  double sigma;  // >= 0
};
using LevyModel = std::variant<LinearDrift, BrownianDrift>;

double laplace_exponent(const LevyModel& model, double a);

// Some exponent alpha_star > alpha with phi(alpha_star) < 0, if one exists.
// Linear drift: alpha + 1. Brownian: midpoint of (alpha, 2 mu / sigma^2)
// when that interval is nonempty, otherwise nullopt. sigma == 0 behaves as
// linear drift with delta = mu.
std::optional<double> find_alpha_star(const LevyModel& model, double alpha);

// One coherent sampled path per replication: discount factors e^{-R_s} at
// the given (ascending, in [0, horizon]) claim times, plus the premium
// integral int_0^horizon e^{-R_s} ds along the same path.
//
// Deterministic models use closed forms (this includes Brownian with
// sigma == 0). For sigma > 0 the path is forward-sampled once on the merged
// grid of claim times and a regular grid with `grid_steps` intervals, and
// the premium integral is a trapezoidal sum on that grid.
class DiscountPath {
 public:
  DiscountPath(const LevyModel& model, std::span<const double> claim_times, double horizon,
               RngStream& rng, std::size_t grid_steps = 1000);

  // e^{-R} at claim_times[i], in input order.
  double factor(std::size_t i) const { return factors_[i]; }
  const std::vector<double>& factors() const { return factors_; }
  // int_0^horizon e^{-R_s} ds along this path.
  double premium_integral() const { return premium_integral_; }

 private:
  std::vector<double> factors_;
  double premium_integral_ = 0.0;
};

}  // namespace sysrisk
