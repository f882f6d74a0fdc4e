#include "sysrisk/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sysrisk/rng.hpp"

namespace sysrisk {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t order_index(std::size_t n, double q) {
  if (n == 0) throw std::domain_error("empirical estimator: empty sample");
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("empirical estimator: q must be in (0,1)");
  auto m = static_cast<std::size_t>(std::floor(static_cast<double>(n) * q));
  if (m < 1) throw std::domain_error("empirical estimator: floor(n q) must be >= 1");
  return m;
}

// m-th order statistic (1-based) of the values addressed by [begin, end).
double nth_value(std::vector<double>& scratch, std::size_t m) {
  auto it = scratch.begin() + static_cast<std::ptrdiff_t>(m - 1);
  std::nth_element(scratch.begin(), it, scratch.end());
  return *it;
}

double stddev(const std::vector<double>& v) {
  if (v.size() < 2) return kNaN;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

struct SesMesPoint {
  std::vector<double> ses, mes;
  std::size_t exceedances = 0;
};

// One SES/MES evaluation for all lines on a (possibly resampled) index view.
template <typename Index>
SesMesPoint evaluate_point(const std::vector<std::span<const double>>& z_lines,
                           std::span<const double> d, std::size_t m, Index index, std::size_t n,
                           std::vector<double>& scratch) {
  scratch.resize(n);
  for (std::size_t i = 0; i < n; ++i) scratch[i] = d[index(i)];
  double d_star = nth_value(scratch, m);

  std::size_t num_lines = z_lines.size();
  std::vector<double> z_star(num_lines);
  for (std::size_t k = 0; k < num_lines; ++k) {
    for (std::size_t i = 0; i < n; ++i) scratch[i] = z_lines[k][index(i)];
    z_star[k] = nth_value(scratch, m);
  }

  SesMesPoint point;
  point.ses.assign(num_lines, 0.0);
  point.mes.assign(num_lines, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t idx = index(i);
    if (!(d[idx] > d_star)) continue;
    ++point.exceedances;
    for (std::size_t k = 0; k < num_lines; ++k) {
      double z = z_lines[k][idx];
      point.ses[k] += std::max(z - z_star[k], 0.0);
      point.mes[k] += z;
    }
  }
  double denom = static_cast<double>(point.exceedances);
  for (std::size_t k = 0; k < num_lines; ++k) {
    point.ses[k] = point.exceedances ? point.ses[k] / denom : kNaN;
    point.mes[k] = point.exceedances ? point.mes[k] / denom : kNaN;
  }
  return point;
}

}  // namespace

EmpiricalEstimate empirical_tail(std::span<const double> sample, double threshold) {
  if (sample.empty()) throw std::domain_error("empirical_tail: empty sample");
  std::size_t count = 0;
  for (double x : sample)
    if (x > threshold) ++count;
  double n = static_cast<double>(sample.size());
  double p = static_cast<double>(count) / n;
  return {p, std::sqrt(p * (1.0 - p) / n), count};
}

double empirical_quantile(std::span<const double> sample, double q) {
  std::size_t m = order_index(sample.size(), q);
  std::vector<double> scratch(sample.begin(), sample.end());
  return nth_value(scratch, m);
}

SystemicEstimates systemic_estimates(const std::vector<std::span<const double>>& z_lines,
                                     std::span<const double> d, double q,
                                     const BootstrapOptions& options) {
  if (z_lines.empty()) throw std::domain_error("systemic_estimates: no lines");
  std::size_t n = d.size();
  for (const auto& z : z_lines)
    if (z.size() != n) throw std::domain_error("systemic_estimates: span lengths differ");
  std::size_t m = order_index(n, q);
  std::size_t num_lines = z_lines.size();

  std::vector<double> scratch;
  SesMesPoint point =
      evaluate_point(z_lines, d, m, [](std::size_t i) { return i; }, n, scratch);

  SystemicEstimates out;
  out.q = q;
  out.ses.resize(num_lines);
  out.mes.resize(num_lines);
  for (std::size_t k = 0; k < num_lines; ++k) {
    out.ses[k] = {point.ses[k], kNaN, point.exceedances};
    out.mes[k] = {point.mes[k], kNaN, point.exceedances};
  }
  if (options.resamples == 0) return out;

  std::vector<std::vector<double>> boot_ses(num_lines), boot_mes(num_lines);
  std::vector<std::size_t> idx(n);
  for (std::size_t r = 0; r < options.resamples; ++r) {
    RngStream rng(options.seed, r);
    for (auto& i : idx)
      i = std::min(n - 1, static_cast<std::size_t>(rng.uniform01() * static_cast<double>(n)));
    SesMesPoint bp =
        evaluate_point(z_lines, d, m, [&idx](std::size_t i) { return idx[i]; }, n, scratch);
    // A resample whose maximum ties the threshold order statistic has no
    // exceedances and no estimate; drop it rather than poisoning the SE.
    if (bp.exceedances == 0) continue;
    for (std::size_t k = 0; k < num_lines; ++k) {
      boot_ses[k].push_back(bp.ses[k]);
      boot_mes[k].push_back(bp.mes[k]);
    }
  }
  for (std::size_t k = 0; k < num_lines; ++k) {
    out.ses[k].std_error = stddev(boot_ses[k]);
    out.mes[k].std_error = stddev(boot_mes[k]);
  }
  return out;
}

EmpiricalEstimate empirical_ses(std::span<const double> z, std::span<const double> d, double q,
                                const BootstrapOptions& options) {
  return systemic_estimates({z}, d, q, options).ses[0];
}

EmpiricalEstimate empirical_mes(std::span<const double> z, std::span<const double> d, double q,
                                const BootstrapOptions& options) {
  return systemic_estimates({z}, d, q, options).mes[0];
}

}  // namespace sysrisk
