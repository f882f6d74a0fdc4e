#include "sysrisk/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sysrisk {

namespace {

void check_model(const LevyModel& model) {
  if (const auto* lin = std::get_if<LinearDrift>(&model)) {
    if (!(lin->delta > 0.0) || !std::isfinite(lin->delta))
      throw std::domain_error("LinearDrift: delta must be finite and > 0");
  } else {
    const auto& bm = std::get<BrownianDrift>(model);
    if (!(bm.mu > 0.0) || !std::isfinite(bm.mu))
      throw std::domain_error("BrownianDrift: mu must be finite and > 0");
    if (!(bm.sigma >= 0.0) || !std::isfinite(bm.sigma))
      throw std::domain_error("BrownianDrift: sigma must be finite and >= 0");
  }
}

// Premium integral for the deterministic path R_s = rate * s:
// int_0^t e^{-rate s} ds = (1 - e^{-rate t}) / rate = -expm1(-rate t) / rate.
double deterministic_premium(double rate, double t) {
  if (rate == 0.0) return t;
  return -std::expm1(-rate * t) / rate;
}

}  // namespace

double laplace_exponent(const LevyModel& model, double a) {
  check_model(model);
  if (!std::isfinite(a)) throw std::domain_error("laplace_exponent: a must be finite");
  if (const auto* lin = std::get_if<LinearDrift>(&model)) return -a * lin->delta;
  const auto& bm = std::get<BrownianDrift>(model);
  return -a * bm.mu + 0.5 * a * a * bm.sigma * bm.sigma;
}

std::optional<double> find_alpha_star(const LevyModel& model, double alpha) {
  check_model(model);
  if (!(alpha > 0.0)) throw std::domain_error("find_alpha_star: alpha must be > 0");
  if (std::holds_alternative<LinearDrift>(model)) return alpha + 1.0;
  const auto& bm = std::get<BrownianDrift>(model);
  if (bm.sigma == 0.0) return alpha + 1.0;
  // phi(a) < 0 iff a < 2 mu / sigma^2; need alpha_star strictly above alpha.
  double upper = 2.0 * bm.mu / (bm.sigma * bm.sigma);
  if (alpha >= upper) return std::nullopt;
  return 0.5 * (alpha + upper);
}

DiscountPath::DiscountPath(const LevyModel& model, std::span<const double> claim_times,
                           double horizon, RngStream& rng, std::size_t grid_steps) {
  check_model(model);
  if (!(horizon >= 0.0)) throw std::invalid_argument("DiscountPath: horizon must be >= 0");
  for (std::size_t i = 0; i < claim_times.size(); ++i) {
    double s = claim_times[i];
    if (!(s >= 0.0 && s <= horizon))
      throw std::invalid_argument("DiscountPath: claim time outside [0, horizon]");
    if (i > 0 && s < claim_times[i - 1])
      throw std::invalid_argument("DiscountPath: claim times must be ascending");
  }

  double drift, sigma;
  if (const auto* lin = std::get_if<LinearDrift>(&model)) {
    drift = lin->delta;
    sigma = 0.0;
  } else {
    const auto& bm = std::get<BrownianDrift>(model);
    drift = bm.mu;
    sigma = bm.sigma;
  }

  factors_.resize(claim_times.size());

  if (sigma == 0.0) {
    for (std::size_t i = 0; i < claim_times.size(); ++i)
      factors_[i] = std::exp(-drift * claim_times[i]);
    premium_integral_ = deterministic_premium(drift, horizon);
    return;
  }

  if (grid_steps == 0) throw std::invalid_argument("DiscountPath: grid_steps must be >= 1");
  // Merged grid: regular grid for the integral plus the claim times.
  std::vector<double> grid;
  grid.reserve(grid_steps + 1 + claim_times.size());
  for (std::size_t j = 0; j <= grid_steps; ++j)
    grid.push_back(horizon * static_cast<double>(j) / static_cast<double>(grid_steps));
  grid.insert(grid.end(), claim_times.begin(), claim_times.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // Forward-sample R on the grid and integrate e^{-R} by trapezoid.
  std::vector<double> efac(grid.size());
  double r = 0.0;
  efac[0] = 1.0;  // grid[0] == 0
  for (std::size_t j = 1; j < grid.size(); ++j) {
    double dt = grid[j] - grid[j - 1];
    r += drift * dt + sigma * std::sqrt(dt) * rng.normal(0.0, 1.0);
    efac[j] = std::exp(-r);
    premium_integral_ += 0.5 * (efac[j] + efac[j - 1]) * dt;
  }

  for (std::size_t i = 0; i < claim_times.size(); ++i) {
    auto it = std::lower_bound(grid.begin(), grid.end(), claim_times[i]);
    factors_[i] = efac[static_cast<std::size_t>(it - grid.begin())];
  }
}

}  // namespace sysrisk
