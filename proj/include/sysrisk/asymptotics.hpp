#pragma once

#include <cstddef>
#include <vector>

#include "sysrisk/model.hpp"
#include "sysrisk/weights.hpp"

namespace sysrisk {

// First-order tail of the discounted aggregate claim amount S_t (the same
// expression holds for the net loss D_t), in the direct display form
//   P(S_t > x) ~ sum_streams F_bar_stream(x) * int_0^t e^{s phi(alpha)} dlambda_s.
// Asymptotically this equals (sum_k l_k(t)) * F_bar_ref(x).
double tail_asymptotic(const ModelConfig& config, double x, double t);

// Per-line tail P(Z_t^k > x); same form restricted to line k's streams.
// Summing over k reproduces tail_asymptotic exactly.
double line_tail_asymptotic(const ModelConfig& config, std::size_t k, double x, double t);

// Value-at-risk of D_t: F_{D_t}^{-1}(q) ~ (sum_k l_k)^{1/alpha} * F^{-1}(q).
double var_asymptotic(const ModelConfig& config, double q, double t);

// Shape factors of the systemic measures as functions of the line share
// rho = l_k / sum l. Require alpha > 1.
double h_ses(double rho, double alpha);
double h_mes(double rho, double alpha);

// Systemic expected shortfall of line k at level q:
//   SES ~ [ rho_k ((sum l)^{1/alpha} - l_k^{1/alpha}) + rho_k (sum l)^{1/alpha}/(alpha-1) ] F^{-1}(q)
// Marginal expected shortfall:
//   MES ~ alpha/(alpha-1) * l_k * (sum l)^{1/alpha - 1} * F^{-1}(q)
double ses_asymptotic(const ModelConfig& config, std::size_t k, double q, double t);
double mes_asymptotic(const ModelConfig& config, std::size_t k, double q, double t);

struct AsymptoticReport {
  WeightReport weights;
  double tail_at_x = 0.0;
  double var_q = 0.0;
  std::vector<double> ses;
  std::vector<double> mes;
};

AsymptoticReport evaluate_report(const ModelConfig& config, double x, double q, double t);

}  // namespace sysrisk
