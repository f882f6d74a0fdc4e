#pragma once

#include <vector>

#include "sysrisk/arrivals.hpp"
#include "sysrisk/model.hpp"

namespace sysrisk {

// Asymptotic line weights l_k(t) = a_k * I_x,k + b_k * I_y,k where a_k, b_k
// are the tail-equivalence ratios of the line's claim tails against the
// reference tail and I are the phi(alpha)-weighted arrival exposures
// int_0^t e^{s phi(alpha)} dlambda_s.
double line_weight(const LineSpec& line, const TailSpec& reference, double phi, double t);

struct WeightReport {
  std::vector<double> per_line;  // l_k(t)
  double total = 0.0;            // sum_k l_k(t)
  std::vector<double> shares;    // l_k / total
};

WeightReport total_weight(const ModelConfig& config, double t);

}  // namespace sysrisk
