#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "sysrisk/model.hpp"

namespace testutil {

inline std::string source_path(const std::string& rel) {
  return std::string(SYSRISK_SOURCE_DIR) + "/" + rel;
}

inline sysrisk::ModelConfig benchmark_config() {
  return sysrisk::load_config(source_path("configs/benchmark.toml"));
}

inline double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double sample_sd(const std::vector<double>& v) {
  double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Kolmogorov-Smirnov distance against the U(0,1) cdf.
inline double ks_uniform(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double lo = v[i] - static_cast<double>(i) / n;
    double hi = static_cast<double>(i + 1) / n - v[i];
    d = std::max({d, lo, hi});
  }
  return d;
}

// Spearman rank correlation (no tie handling; inputs are continuous).
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&v](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(v.size());
    for (std::size_t pos = 0; pos < idx.size(); ++pos) r[idx[pos]] = static_cast<double>(pos + 1);
    return r;
  };
  std::vector<double> ra = ranks(a), rb = ranks(b);
  double n = static_cast<double>(a.size());
  double mu = (n + 1.0) / 2.0;
  double num = 0.0, da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    num += (ra[i] - mu) * (rb[i] - mu);
    da += (ra[i] - mu) * (ra[i] - mu);
    db += (rb[i] - mu) * (rb[i] - mu);
  }
  return num / std::sqrt(da * db);
}

}  // namespace testutil
