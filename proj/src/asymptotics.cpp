#include "sysrisk/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace sysrisk {

namespace {

void check_line_index(const ModelConfig& config, std::size_t k) {
  if (k >= config.lines.size()) throw std::domain_error("line index out of range");
}

void check_alpha_above_one(double alpha) {
  if (!(alpha > 1.0))
    throw std::domain_error("SES/MES asymptotics require alpha > 1 (finite claim mean)");
}

}  // namespace

namespace {

// Tail of one line's discounted claim sum in the direct per-stream form
//   F_bar_x(x) * int_0^t e^{s phi} dlambda_x + F_bar_y(x) * int e^{s phi} dlambda_y,
// i.e. each stream's own tail at x. This agrees with the factorized form
// l_k(t) * F_bar_ref(x) to first order but is exact at finite x in the sense
// of the displayed asymptotic.
double line_tail_direct(const LineSpec& line, double phi, double x, double t) {
  return tail(line.x_claims, x) * exposure_integral(PoissonIntensity{line.x_intensity}, phi, t) +
         tail(line.y_claims, x) * exposure_integral(PoissonIntensity{line.y_intensity}, phi, t);
}

}  // namespace

double tail_asymptotic(const ModelConfig& config, double x, double t) {
  require_valid(config);
  double phi = laplace_exponent(config.discount, config.alpha());
  double total = 0.0;
  for (const auto& line : config.lines) total += line_tail_direct(line, phi, x, t);
  return total;
}

double line_tail_asymptotic(const ModelConfig& config, std::size_t k, double x, double t) {
  require_valid(config);
  check_line_index(config, k);
  double phi = laplace_exponent(config.discount, config.alpha());
  return line_tail_direct(config.lines[k], phi, x, t);
}

double var_asymptotic(const ModelConfig& config, double q, double t) {
  require_valid(config);
  WeightReport w = total_weight(config, t);
  return std::pow(w.total, 1.0 / config.alpha()) * quantile(config.reference_tail(), q);
}

double h_ses(double rho, double alpha) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("h_ses: rho must be in [0,1]");
  check_alpha_above_one(alpha);
  return rho * (1.0 - std::pow(rho, 1.0 / alpha) + 1.0 / (alpha - 1.0));
}

double h_mes(double rho, double alpha) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("h_mes: rho must be in [0,1]");
  check_alpha_above_one(alpha);
  return alpha * rho / (alpha - 1.0);
}

double ses_asymptotic(const ModelConfig& config, std::size_t k, double q, double t) {
  require_valid(config, /*require_ses_mes=*/true);
  check_line_index(config, k);
  double alpha = config.alpha();
  WeightReport w = total_weight(config, t);
  double rho = w.shares[k];
  double scale = std::pow(w.total, 1.0 / alpha);
  // rho * (L^{1/alpha} - l_k^{1/alpha} + L^{1/alpha}/(alpha-1)) * F^{-1}(q)
  // == L^{1/alpha} * h_ses(rho, alpha) * F^{-1}(q)
  double factor = rho * (scale - std::pow(w.per_line[k], 1.0 / alpha) + scale / (alpha - 1.0));
  return factor * quantile(config.reference_tail(), q);
}

double mes_asymptotic(const ModelConfig& config, std::size_t k, double q, double t) {
  require_valid(config, /*require_ses_mes=*/true);
  check_line_index(config, k);
  double alpha = config.alpha();
  WeightReport w = total_weight(config, t);
  double factor = alpha / (alpha - 1.0) * w.per_line[k] * std::pow(w.total, 1.0 / alpha - 1.0);
  return factor * quantile(config.reference_tail(), q);
}

AsymptoticReport evaluate_report(const ModelConfig& config, double x, double q, double t) {
  require_valid(config, /*require_ses_mes=*/true);
  AsymptoticReport report;
  report.weights = total_weight(config, t);
  report.tail_at_x = tail_asymptotic(config, x, t);
  report.var_q = var_asymptotic(config, q, t);
  report.ses.reserve(config.lines.size());
  report.mes.reserve(config.lines.size());
  for (std::size_t k = 0; k < config.lines.size(); ++k) {
    report.ses.push_back(ses_asymptotic(config, k, q, t));
    report.mes.push_back(mes_asymptotic(config, k, q, t));
  }
  return report;
}

}  // namespace sysrisk
