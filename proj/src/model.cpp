#include "sysrisk/model.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "toml_lite.hpp"

namespace sysrisk {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_positive(std::vector<ValidationIssue>& issues, const std::string& field, double v) {
  if (!(v > 0.0) || !std::isfinite(v))
    issues.push_back({field, "must be finite and > 0 (got " + num(v) + ")"});
}

}  // namespace

double ModelConfig::alpha() const {
  if (lines.empty()) throw std::domain_error("ModelConfig: no lines");
  return lines.front().x_claims.alpha;
}

const TailSpec& ModelConfig::reference_tail() const {
  if (reference_line >= lines.size()) throw std::domain_error("ModelConfig: reference_line out of range");
  return lines[reference_line].x_claims;
}

std::string ModelConfig::canonical_string() const {
  std::ostringstream ss;
  ss << "horizon=" << num(horizon) << ";theta=" << num(copula_theta)
     << ";ref=" << reference_line << ";discount=";
  if (const auto* lin = std::get_if<LinearDrift>(&discount))
    ss << "linear," << num(lin->delta);
  else {
    const auto& bm = std::get<BrownianDrift>(discount);
    ss << "brownian," << num(bm.mu) << "," << num(bm.sigma);
  }
  for (const auto& line : lines) {
    ss << ";line{" << line.name << ",x=" << num(line.x_claims.gamma) << "/" << num(line.x_claims.alpha)
       << ",y=" << num(line.y_claims.gamma) << "/" << num(line.y_claims.alpha)
       << ",lx=" << num(line.x_intensity) << ",ly=" << num(line.y_intensity)
       << ",c=" << num(line.premium_rate) << "}";
  }
  return ss.str();
}

std::uint64_t ModelConfig::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_string()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ValidationReport validate(const ModelConfig& config, bool require_ses_mes) {
  ValidationReport report;
  auto& issues = report.issues;

  if (config.lines.empty()) {
    issues.push_back({"lines", "at least one line is required"});
    return report;
  }

  for (std::size_t k = 0; k < config.lines.size(); ++k) {
    const auto& line = config.lines[k];
    std::string prefix = "lines[" + std::to_string(k + 1) + "].";
    check_positive(issues, prefix + "x_claims.gamma", line.x_claims.gamma);
    check_positive(issues, prefix + "x_claims.alpha", line.x_claims.alpha);
    check_positive(issues, prefix + "y_claims.gamma", line.y_claims.gamma);
    check_positive(issues, prefix + "y_claims.alpha", line.y_claims.alpha);
    check_positive(issues, prefix + "x_intensity", line.x_intensity);
    check_positive(issues, prefix + "y_intensity", line.y_intensity);
    if (!(line.premium_rate >= 0.0) || !std::isfinite(line.premium_rate))
      issues.push_back({prefix + "premium_rate", "must be finite and >= 0"});
  }

  double a = config.lines.front().x_claims.alpha;
  for (std::size_t k = 0; k < config.lines.size(); ++k) {
    const auto& line = config.lines[k];
    if (line.x_claims.alpha != a || line.y_claims.alpha != a) {
      issues.push_back({"lines", "all claim streams must share one tail index alpha"});
      break;
    }
  }

  check_positive(issues, "copula_theta", config.copula_theta);
  check_positive(issues, "horizon", config.horizon);
  if (config.reference_line >= config.lines.size())
    issues.push_back({"reference_line", "out of range"});

  bool discount_params_ok = true;
  if (const auto* lin = std::get_if<LinearDrift>(&config.discount)) {
    check_positive(issues, "discount.delta", lin->delta);
    discount_params_ok = lin->delta > 0.0 && std::isfinite(lin->delta);
  } else {
    const auto& bm = std::get<BrownianDrift>(config.discount);
    check_positive(issues, "discount.mu", bm.mu);
    discount_params_ok = bm.mu > 0.0 && std::isfinite(bm.mu);
    if (!(bm.sigma >= 0.0) || !std::isfinite(bm.sigma)) {
      issues.push_back({"discount.sigma", "must be finite and >= 0"});
      discount_params_ok = false;
    }
  }
  if (discount_params_ok && a > 0.0 && std::isfinite(a) && !find_alpha_star(config.discount, a))
    issues.push_back({"discount",
                      "no alpha_star > alpha with phi(alpha_star) < 0; "
                      "discounted moment condition fails"});

  if (require_ses_mes && !(a > 1.0))
    issues.push_back({"alpha", "alpha must exceed 1 for SES/MES asymptotics (got " + num(a) + ")"});

  return report;
}

void require_valid(const ModelConfig& config, bool require_ses_mes) {
  ValidationReport report = validate(config, require_ses_mes);
  if (report.ok()) return;
  std::string msg = "invalid model configuration:";
  for (const auto& issue : report.issues) msg += "\n  " + issue.field + ": " + issue.message;
  throw std::domain_error(msg);
}

namespace {

using toml::Table;
using toml::Value;

const Value& require_key(const Table& t, const std::string& key, const std::string& context) {
  auto it = t.find(key);
  if (it == t.end()) throw ConfigError(context + ": missing required key '" + key + "'");
  return it->second;
}

void reject_unknown(const Table& t, const std::set<std::string>& known, const std::string& context) {
  for (const auto& [key, value] : t)
    if (!known.contains(key)) throw ConfigError(context + ": unknown key '" + key + "'");
}

TailSpec parse_tail(const Value& v, const std::string& context) {
  const Table& t = v.as_table(context);
  reject_unknown(t, {"gamma", "alpha"}, context);
  return {require_key(t, "gamma", context).as_number(context + ".gamma"),
          require_key(t, "alpha", context).as_number(context + ".alpha")};
}

}  // namespace

ModelConfig load_config(const std::string& path) {
  Table root;
  try {
    root = toml::parse_file(path);
  } catch (const toml::ParseError& e) {
    throw ConfigError(e.what());
  }

  try {
    reject_unknown(root, {"horizon", "copula_theta", "reference_line", "discount", "lines"},
                   "config");
    ModelConfig config;
    config.horizon = require_key(root, "horizon", "config").as_number("horizon");
    config.copula_theta = require_key(root, "copula_theta", "config").as_number("copula_theta");
    if (auto it = root.find("reference_line"); it != root.end()) {
      double raw = it->second.as_number("reference_line");
      if (raw < 1.0 || raw != std::floor(raw))
        throw ConfigError("reference_line: expected a 1-based integer");
      config.reference_line = static_cast<std::size_t>(raw) - 1;
    }

    const Table& disc = require_key(root, "discount", "config").as_table("discount");
    const std::string& kind = require_key(disc, "kind", "discount").as_string("discount.kind");
    if (kind == "linear") {
      reject_unknown(disc, {"kind", "delta"}, "discount");
      config.discount = LinearDrift{require_key(disc, "delta", "discount").as_number("discount.delta")};
    } else if (kind == "brownian") {
      reject_unknown(disc, {"kind", "mu", "sigma"}, "discount");
      BrownianDrift bm{require_key(disc, "mu", "discount").as_number("discount.mu"), 0.0};
      if (auto it = disc.find("sigma"); it != disc.end()) bm.sigma = it->second.as_number("discount.sigma");
      config.discount = bm;
    } else {
      throw ConfigError("discount.kind: expected \"linear\" or \"brownian\"");
    }

    const toml::Array& lines = require_key(root, "lines", "config").as_array("lines");
    if (lines.empty()) throw ConfigError("lines: at least one [[lines]] entry is required");
    for (std::size_t k = 0; k < lines.size(); ++k) {
      std::string context = "lines[" + std::to_string(k + 1) + "]";
      const Table& t = lines[k].as_table(context);
      reject_unknown(t, {"name", "x_claims", "y_claims", "x_intensity", "y_intensity", "premium_rate"},
                     context);
      LineSpec line;
      line.name = t.contains("name") ? t.at("name").as_string(context + ".name")
                                     : "line" + std::to_string(k + 1);
      line.x_claims = parse_tail(require_key(t, "x_claims", context), context + ".x_claims");
      line.y_claims = parse_tail(require_key(t, "y_claims", context), context + ".y_claims");
      line.x_intensity = require_key(t, "x_intensity", context).as_number(context + ".x_intensity");
      line.y_intensity = require_key(t, "y_intensity", context).as_number(context + ".y_intensity");
      line.premium_rate = require_key(t, "premium_rate", context).as_number(context + ".premium_rate");
      config.lines.push_back(std::move(line));
    }

    if (config.reference_line >= config.lines.size())
      throw ConfigError("reference_line: exceeds the number of lines");
    return config;
  } catch (const toml::ParseError& e) {
    throw ConfigError(std::string("config schema: ") + e.what());
  }
}

}  // namespace sysrisk
