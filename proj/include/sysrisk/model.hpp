#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sysrisk/levy.hpp"
#include "sysrisk/pareto.hpp"

namespace sysrisk {

// One business line: primary (x) and secondary (y) claim streams with their
// own Pareto tails and Poisson arrival intensities, plus a premium rate.
struct LineSpec {
  std::string name;
  TailSpec x_claims;
  TailSpec y_claims;
  double x_intensity = 0.0;
  double y_intensity = 0.0;
  double premium_rate = 0.0;
};

struct ModelConfig {
  std::vector<LineSpec> lines;
  double copula_theta = 0.0;
  LevyModel discount = LinearDrift{1.0};
  double horizon = 1.0;
  std::size_t reference_line = 0;  // 0-based; the file format is 1-based

  std::size_t num_lines() const { return lines.size(); }
  // Common tail index shared by every claim stream.
  double alpha() const;
  // Reference tail F: the x-claims of the reference line.
  const TailSpec& reference_tail() const;

  std::string canonical_string() const;
  // FNV-1a 64-bit over canonical_string(); ties simulation artifacts to the
  // exact configuration that produced them.
  std::uint64_t digest() const;
};

struct ValidationIssue {
  std::string field;
  std::string message;
};
struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Semantic checks: positivity, common alpha, the discounted-moment condition
// (some alpha_star > alpha with phi(alpha_star) < 0 must exist), and, when
// require_ses_mes is set, alpha > 1.
ValidationReport validate(const ModelConfig& config, bool require_ses_mes = false);

// Throws std::domain_error listing all issues when validation fails.
void require_valid(const ModelConfig& config, bool require_ses_mes = false);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a config file (TOML subset); throws ConfigError on I/O, syntax, or
// schema-shape problems. Semantic validity is checked separately.
ModelConfig load_config(const std::string& path);

}  // namespace sysrisk
