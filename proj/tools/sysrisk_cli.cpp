// Command-line front end: validate configs, evaluate the closed-form
// asymptotics, run simulation batches, and cross-check the two.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sysrisk/asymptotics.hpp"
#include "sysrisk/estimators.hpp"
#include "sysrisk/simulate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // validation / hypothesis violations, bad usage
constexpr int kExitIo = 2;      // unreadable config, unwritable output

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

unsigned resolve_workers(unsigned cli_value) {
  if (cli_value != 0) return cli_value;
  if (const char* env = std::getenv("SYSRISK_WORKERS")) {
    long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<unsigned>(parsed);
  }
  return 0;  // let run_batch pick the hardware concurrency
}

struct CommonArgs {
  std::string config_path;
  unsigned workers = 0;
};

sysrisk::BatchResult obtain_batch(const sysrisk::ModelConfig& config, const std::string& batch_path,
                                  std::size_t n, std::uint64_t seed, unsigned workers) {
  if (!batch_path.empty()) {
    sysrisk::BatchResult batch = sysrisk::load_batch(batch_path);
    if (batch.config_digest != config.digest())
      throw std::domain_error("batch file was produced by a different configuration (digest mismatch)");
    return batch;
  }
  return sysrisk::run_batch(config, n, seed, resolve_workers(workers));
}

int cmd_validate(const std::string& config_path, bool need_sesmes) {
  sysrisk::ModelConfig config = sysrisk::load_config(config_path);
  sysrisk::ValidationReport report = sysrisk::validate(config, need_sesmes);
  if (report.ok()) {
    std::cout << "OK: " << config.lines.size() << " line(s), alpha = " << fmt(config.alpha())
              << ", config digest " << hex64(config.digest()) << "\n";
    return kExitOk;
  }
  for (const auto& issue : report.issues)
    std::cout << "violation: " << issue.field << ": " << issue.message << "\n";
  return kExitDomain;
}

int cmd_asymptotic(const std::string& config_path, const std::vector<double>& xs,
                   const std::vector<double>& qs, std::optional<double> t_opt) {
  sysrisk::ModelConfig config = sysrisk::load_config(config_path);
  double t = t_opt.value_or(config.horizon);
  if (xs.empty() == qs.empty())
    throw std::domain_error("asymptotic: provide exactly one of --x or --q");
  if (!xs.empty()) {
    sysrisk::require_valid(config);
    std::cout << "x,tail_asymptotic\n";
    for (double x : xs)
      std::cout << fmt(x) << "," << fmt(sysrisk::tail_asymptotic(config, x, t)) << "\n";
    return kExitOk;
  }
  sysrisk::require_valid(config, /*require_ses_mes=*/true);
  std::cout << "q,var_asymptotic";
  for (std::size_t k = 0; k < config.lines.size(); ++k)
    std::cout << ",ses_" << k + 1 << ",mes_" << k + 1;
  std::cout << "\n";
  for (double q : qs) {
    std::cout << fmt(q) << "," << fmt(sysrisk::var_asymptotic(config, q, t));
    for (std::size_t k = 0; k < config.lines.size(); ++k)
      std::cout << "," << fmt(sysrisk::ses_asymptotic(config, k, q, t)) << ","
                << fmt(sysrisk::mes_asymptotic(config, k, q, t));
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, std::size_t n, std::uint64_t seed,
                 unsigned workers, const std::string& out_path) {
  sysrisk::ModelConfig config = sysrisk::load_config(config_path);
  sysrisk::require_valid(config);
  sysrisk::BatchResult batch = sysrisk::run_batch(config, n, seed, resolve_workers(workers));
  sysrisk::save_batch(batch, out_path);

  nlohmann::json manifest{
      {"command", "simulate"},
      {"config_path", config_path},
      {"config_digest", hex64(batch.config_digest)},
      {"n", n},
      {"seed", seed},
      {"sample_digest", hex64(batch.sample_digest())},
      {"wall_seconds", batch.wall_seconds},
      {"created_unix", std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count()},
      {"outputs", {out_path, out_path + ".meta.json"}},
  };
  std::string manifest_path = out_path + ".manifest.json";
  std::ofstream mout(manifest_path);
  if (!mout) throw std::runtime_error("cannot open " + manifest_path);
  mout << manifest.dump(2) << "\n";

  std::cout << "wrote " << out_path << " (" << n << " replications, seed " << seed
            << ", sample digest " << hex64(batch.sample_digest()) << ")\n";
  return kExitOk;
}

int cmd_compare_tail(const std::string& config_path, const std::vector<double>& xs,
                     const std::string& batch_path, std::size_t n, std::uint64_t seed,
                     unsigned workers) {
  sysrisk::ModelConfig config = sysrisk::load_config(config_path);
  sysrisk::require_valid(config);
  if (xs.empty()) throw std::domain_error("compare-tail: --x list must not be empty");
  sysrisk::BatchResult batch = obtain_batch(config, batch_path, n, seed, workers);

  std::cout << "x,theoretical,empirical,empirical_se,ratio\n";
  for (double x : xs) {
    double theo = sysrisk::tail_asymptotic(config, x, batch.horizon);
    sysrisk::EmpiricalEstimate emp = sysrisk::empirical_tail(batch.d_total, x);
    double ratio = theo > 0.0 ? emp.value / theo : std::numeric_limits<double>::quiet_NaN();
    std::cout << fmt(x) << "," << fmt(theo) << "," << fmt(emp.value) << "," << fmt(emp.std_error)
              << "," << fmt(ratio) << "\n";
  }
  return kExitOk;
}

int cmd_compare_systemic(const std::string& config_path, std::size_t line_1based, double q_start,
                         double q_stop, std::size_t q_count, const std::string& batch_path,
                         std::size_t n, std::uint64_t seed, unsigned workers,
                         std::size_t resamples) {
  sysrisk::ModelConfig config = sysrisk::load_config(config_path);
  sysrisk::require_valid(config, /*require_ses_mes=*/true);
  if (line_1based < 1 || line_1based > config.lines.size())
    throw std::domain_error("compare-systemic: --line out of range");
  if (q_count < 1) throw std::domain_error("compare-systemic: --q-grid count must be >= 1");
  std::size_t k = line_1based - 1;

  sysrisk::BatchResult batch = obtain_batch(config, batch_path, n, seed, workers);
  std::vector<double> z_line = batch.z_column(k);
  sysrisk::BootstrapOptions boot;
  boot.resamples = resamples;
  boot.seed = batch.seed ^ 0x9e3779b97f4a7c15ULL;

  std::cout << "q,ses_empirical,ses_se,ses_theory,mes_empirical,mes_se,mes_theory\n";
  for (std::size_t i = 0; i < q_count; ++i) {
    double q = q_count == 1
                   ? q_start
                   : q_start + (q_stop - q_start) * static_cast<double>(i) /
                                   static_cast<double>(q_count - 1);
    sysrisk::SystemicEstimates est =
        sysrisk::systemic_estimates({z_line}, batch.d_total, q, boot);
    std::cout << fmt(q) << "," << fmt(est.ses[0].value) << "," << fmt(est.ses[0].std_error) << ","
              << fmt(sysrisk::ses_asymptotic(config, k, q, batch.horizon)) << ","
              << fmt(est.mes[0].value) << "," << fmt(est.mes[0].std_error) << ","
              << fmt(sysrisk::mes_asymptotic(config, k, q, batch.horizon)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-line discounted risk model: asymptotics and simulation"};
  app.require_subcommand(1);

  std::string config_path;
  bool need_sesmes = false;
  auto* validate = app.add_subcommand("validate", "Check a model configuration");
  validate->add_option("config", config_path, "Model config (TOML)")->required();
  validate->add_flag("--need-sesmes", need_sesmes, "Also require SES/MES hypotheses (alpha > 1)");

  std::vector<double> xs, qs;
  std::optional<double> t_opt;
  auto* asymptotic = app.add_subcommand("asymptotic", "Evaluate closed-form asymptotics (CSV)");
  asymptotic->add_option("config", config_path, "Model config (TOML)")->required();
  asymptotic->add_option("--x", xs, "Thresholds for the aggregate tail");
  asymptotic->add_option("--q", qs, "Levels for VaR / SES / MES");
  asymptotic->add_option("--t", t_opt, "Horizon override (defaults to the config horizon)");

  std::size_t n = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out_path, batch_path;
  auto* simulate = app.add_subcommand("simulate", "Run a simulation batch and save it");
  simulate->add_option("config", config_path, "Model config (TOML)")->required();
  simulate->add_option("--n", n, "Number of replications")->required();
  simulate->add_option("--seed", seed, "Base seed");
  simulate->add_option("--workers", workers, "Worker threads (0 = auto; env SYSRISK_WORKERS)");
  simulate->add_option("--out", out_path, "Output sample file")->required();

  auto* compare_tail = app.add_subcommand("compare-tail", "Tail asymptotic vs simulation (CSV)");
  compare_tail->add_option("config", config_path, "Model config (TOML)")->required();
  compare_tail->add_option("--x", xs, "Thresholds")->required();
  compare_tail->add_option("--batch", batch_path, "Reuse a saved sample file");
  compare_tail->add_option("--n", n, "Replications when simulating");
  compare_tail->add_option("--seed", seed, "Base seed when simulating");
  compare_tail->add_option("--workers", workers, "Worker threads (0 = auto)");

  std::size_t line_1based = 1, q_count = 10, resamples = 200;
  double q_start = 0.99, q_stop = 0.999;
  auto* compare_sys =
      app.add_subcommand("compare-systemic", "SES/MES asymptotics vs simulation (CSV)");
  compare_sys->add_option("config", config_path, "Model config (TOML)")->required();
  compare_sys->add_option("--line", line_1based, "Line (1-based)")->required();
  compare_sys->add_option("--q-grid", [&](const std::vector<std::string>& vals) {
    try {
      if (vals.size() != 3) return false;
      q_start = std::stod(vals[0]);
      q_stop = std::stod(vals[1]);
      q_count = static_cast<std::size_t>(std::stoul(vals[2]));
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }, "Equidistant level grid: start stop count")->expected(3);
  compare_sys->add_option("--batch", batch_path, "Reuse a saved sample file");
  compare_sys->add_option("--n", n, "Replications when simulating");
  compare_sys->add_option("--seed", seed, "Base seed when simulating");
  compare_sys->add_option("--workers", workers, "Worker threads (0 = auto)");
  compare_sys->add_option("--resamples", resamples, "Bootstrap resamples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (validate->parsed()) return cmd_validate(config_path, need_sesmes);
    if (asymptotic->parsed()) return cmd_asymptotic(config_path, xs, qs, t_opt);
    if (simulate->parsed())
      return cmd_simulate(config_path, n, seed, workers, out_path);
    if (compare_tail->parsed())
      return cmd_compare_tail(config_path, xs, batch_path, n, seed, workers);
    if (compare_sys->parsed())
      return cmd_compare_systemic(config_path, line_1based, q_start, q_stop, q_count, batch_path,
                                  n, seed, workers, resamples);
  } catch (const sysrisk::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
