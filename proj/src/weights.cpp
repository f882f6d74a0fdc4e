#include "sysrisk/weights.hpp"

#include <stdexcept>

namespace sysrisk {

double line_weight(const LineSpec& line, const TailSpec& reference, double phi, double t) {
  double a = equivalence_ratio(line.x_claims, reference);
  double b = equivalence_ratio(line.y_claims, reference);
  double ix = exposure_integral(PoissonIntensity{line.x_intensity}, phi, t);
  double iy = exposure_integral(PoissonIntensity{line.y_intensity}, phi, t);
  return a * ix + b * iy;
}

WeightReport total_weight(const ModelConfig& config, double t) {
  if (config.lines.empty()) throw std::domain_error("total_weight: no lines");
  double phi = laplace_exponent(config.discount, config.alpha());
  if (!(phi <= 0.0))
    throw std::domain_error("total_weight: phi(alpha) must be <= 0 for the discounted exposure");
  WeightReport report;
  report.per_line.reserve(config.lines.size());
  for (const auto& line : config.lines) {
    double l = line_weight(line, config.reference_tail(), phi, t);
    report.per_line.push_back(l);
    report.total += l;
  }
  report.shares.resize(report.per_line.size());
  for (std::size_t k = 0; k < report.per_line.size(); ++k)
    report.shares[k] = report.total > 0.0 ? report.per_line[k] / report.total : 0.0;
  return report;
}

}  // namespace sysrisk
