#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace sysrisk {

// Arrival-stream mean measures lambda_s = E[N_s].
struct PoissonIntensity {
  double rate;  // > 0 for model use; >= 0 tolerated by the simulator
};
// Piecewise-linear tabulated mean function: ascending (time, mean count)
// knots starting at (0, 0), mean nondecreasing. Escape hatch for general
// renewal streams whose mean function is known.
struct TabulatedRenewal {
  std::vector<std::pair<double, double>> knots;
};
using ArrivalLaw = std::variant<PoissonIntensity, TabulatedRenewal>;

// Exponentially weighted exposure int_0^t e^{phi s} dlambda_s for phi <= 0.
// Poisson: rate * (1 - e^{phi t}) / (-phi), evaluated via expm1; the phi -> 0
// limit (rate * t) is exact. Tabulated: trapezoidal Stieltjes sum over the
// knots restricted to [0, t], interpolating the mean function at t.
double exposure_integral(const ArrivalLaw& law, double phi, double t);

}  // namespace sysrisk
