#include "sysrisk/arrivals.hpp"

#include <cmath>
#include <stdexcept>

namespace sysrisk {

namespace {

double poisson_exposure(double rate, double phi, double t) {
  if (!(rate >= 0.0) || !std::isfinite(rate))
    throw std::domain_error("PoissonIntensity: rate must be finite and >= 0");
  if (phi == 0.0) return rate * t;
  return rate * (-std::expm1(phi * t)) / (-phi);
}

double tabulated_exposure(const TabulatedRenewal& law, double phi, double t) {
  const auto& k = law.knots;
  if (k.empty() || k.front().first != 0.0 || k.front().second != 0.0)
    throw std::domain_error("TabulatedRenewal: knots must start at (0, 0)");
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (!(k[i].first > k[i - 1].first))
      throw std::domain_error("TabulatedRenewal: knot times must be strictly ascending");
    if (!(k[i].second >= k[i - 1].second))
      throw std::domain_error("TabulatedRenewal: mean function must be nondecreasing");
  }

  double acc = 0.0;
  for (std::size_t i = 1; i < k.size(); ++i) {
    double s0 = k[i - 1].first;
    if (s0 >= t) break;
    double s1 = k[i].first;
    double m0 = k[i - 1].second;
    double m1 = k[i].second;
    if (s1 > t) {  // interpolate the mean function at t
      m1 = m0 + (m1 - m0) * (t - s0) / (s1 - s0);
      s1 = t;
    }
    acc += (m1 - m0) * 0.5 * (std::exp(phi * s0) + std::exp(phi * s1));
  }
  return acc;
}

}  // namespace

double exposure_integral(const ArrivalLaw& law, double phi, double t) {
  if (!(phi <= 0.0) || !std::isfinite(phi))
    throw std::domain_error("exposure_integral: phi must be finite and <= 0");
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("exposure_integral: t must be finite and >= 0");
  if (const auto* p = std::get_if<PoissonIntensity>(&law)) return poisson_exposure(p->rate, phi, t);
  return tabulated_exposure(std::get<TabulatedRenewal>(law), phi, t);
}

}  // namespace sysrisk
