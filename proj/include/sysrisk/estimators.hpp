#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sysrisk {

struct EmpiricalEstimate {
  double value = 0.0;
  double std_error = 0.0;      // NaN when no error estimate was requested
  std::size_t exceedances = 0; // tail observations behind the estimate
};

// P(X > threshold) as the exceedance fraction, with the binomial standard
// error sqrt(p_hat (1 - p_hat) / n).
EmpiricalEstimate empirical_tail(std::span<const double> sample, double threshold);

// The floor(n q)-th order statistic (1-based). Requires floor(n q) >= 1.
double empirical_quantile(std::span<const double> sample, double q);

struct BootstrapOptions {
  std::size_t resamples = 200;  // 0 disables the bootstrap (std_error = NaN)
  std::uint64_t seed = 0x0b007;
};

// Systemic expected shortfall of a line against the portfolio total:
// with m = floor(n q), z* and d* the m-th order statistics of z and d,
//   SES_hat = sum_i (z_i - z*)^+ 1{d_i > d*} / #{d_i > d*}.
// Standard error by nonparametric pair bootstrap; degenerate resamples
// (zero exceedances) are dropped, and the error is NaN when fewer than two
// resamples survive.
EmpiricalEstimate empirical_ses(std::span<const double> z, std::span<const double> d, double q,
                                const BootstrapOptions& options = {});

// MES_hat = sum_i z_i 1{d_i > d*} / #{d_i > d*} with d* as above.
EmpiricalEstimate empirical_mes(std::span<const double> z, std::span<const double> d, double q,
                                const BootstrapOptions& options = {});

// SES and MES for every line at one level, sharing bootstrap resamples
// across lines and measures (one resampling pass instead of 2 * num_lines).
struct SystemicEstimates {
  double q = 0.0;
  std::vector<EmpiricalEstimate> ses;
  std::vector<EmpiricalEstimate> mes;
};
SystemicEstimates systemic_estimates(const std::vector<std::span<const double>>& z_lines,
                                     std::span<const double> d, double q,
                                     const BootstrapOptions& options = {});

}  // namespace sysrisk
