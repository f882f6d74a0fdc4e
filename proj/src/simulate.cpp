#include "sysrisk/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sysrisk/frank.hpp"

namespace sysrisk {

namespace {

void check_simulatable(const ModelConfig& config) {
  if (config.lines.empty()) throw std::domain_error("simulate: config has no lines");
  if (!(config.horizon >= 0.0) || !std::isfinite(config.horizon))
    throw std::domain_error("simulate: horizon must be finite and >= 0");
  for (const auto& line : config.lines)
    if (!(line.x_intensity >= 0.0) || !(line.y_intensity >= 0.0))
      throw std::domain_error("simulate: intensities must be >= 0");
}

struct ClaimRef {
  double time;
  std::size_t stream;
  std::size_t index;
};

std::vector<ClaimRef> merged_refs(const ReplicationDraws& draws) {
  std::vector<ClaimRef> refs;
  std::size_t total = 0;
  for (auto c : draws.counts) total += c;
  refs.reserve(total);
  for (std::size_t s = 0; s < draws.arrival_times.size(); ++s)
    for (std::size_t j = 0; j < draws.arrival_times[s].size(); ++j)
      refs.push_back({draws.arrival_times[s][j], s, j});
  std::stable_sort(refs.begin(), refs.end(),
                   [](const ClaimRef& a, const ClaimRef& b) { return a.time < b.time; });
  return refs;
}

}  // namespace

ReplicationDraws draw_replication_inputs(const ModelConfig& config, RngStream& rng) {
  check_simulatable(config);
  std::size_t num_streams = 2 * config.lines.size();
  ReplicationDraws draws;
  draws.counts.resize(num_streams);
  draws.arrival_times.resize(num_streams);

  std::size_t total = 0;
  for (std::size_t k = 0; k < config.lines.size(); ++k) {
    const auto& line = config.lines[k];
    double rates[2] = {line.x_intensity, line.y_intensity};
    for (int part = 0; part < 2; ++part) {
      std::size_t s = 2 * k + static_cast<std::size_t>(part);
      std::uint64_t count = rng.poisson(rates[part] * config.horizon);
      draws.counts[s] = count;
      auto& times = draws.arrival_times[s];
      times.resize(count);
      for (auto& time : times) time = config.horizon * rng.uniform01();
      std::sort(times.begin(), times.end());
      total += count;
    }
  }

  if (total > 0) {
    FrankCopula copula{config.copula_theta, total};
    draws.copula_uniforms = copula.sample(rng);
  }
  return draws;
}

std::vector<double> merged_claim_times(const ReplicationDraws& draws) {
  auto refs = merged_refs(draws);
  std::vector<double> times;
  times.reserve(refs.size());
  for (const auto& ref : refs) times.push_back(ref.time);
  return times;
}

Replication assemble_replication(const ModelConfig& config, const ReplicationDraws& draws,
                                 const DiscountPath& path) {
  check_simulatable(config);
  std::size_t num_streams = 2 * config.lines.size();
  if (draws.counts.size() != num_streams || draws.arrival_times.size() != num_streams)
    throw std::invalid_argument("assemble_replication: draws do not match the config");
  for (std::size_t s = 0; s < num_streams; ++s)
    if (draws.arrival_times[s].size() != draws.counts[s])
      throw std::invalid_argument("assemble_replication: counts and arrival_times disagree");

  // Canonical flat offsets per stream.
  std::vector<std::size_t> offset(num_streams + 1, 0);
  for (std::size_t s = 0; s < num_streams; ++s) offset[s + 1] = offset[s] + draws.counts[s];
  std::size_t total = offset.back();
  if (draws.copula_uniforms.size() != total)
    throw std::invalid_argument("assemble_replication: copula_uniforms has wrong length");

  // Discount factor per canonical claim: claim (s, j) sits at its merged
  // ascending-time position in the path.
  std::vector<double> factor(total);
  auto refs = merged_refs(draws);
  for (std::size_t m = 0; m < refs.size(); ++m)
    factor[offset[refs[m].stream] + refs[m].index] = path.factor(m);

  Replication rep;
  rep.z.assign(config.lines.size(), 0.0);
  rep.claim_count = total;
  for (std::size_t k = 0; k < config.lines.size(); ++k) {
    const auto& line = config.lines[k];
    const TailSpec* tails[2] = {&line.x_claims, &line.y_claims};
    double zk = 0.0;
    for (int part = 0; part < 2; ++part) {
      std::size_t s = 2 * k + static_cast<std::size_t>(part);
      for (std::size_t j = offset[s]; j < offset[s + 1]; ++j) {
        double discounted = factor[j] * quantile(*tails[part], draws.copula_uniforms[j]);
        rep.s_aggregate += discounted;
        zk += discounted;
      }
    }
    zk -= line.premium_rate * path.premium_integral();
    rep.z[k] = zk;
    rep.d_total += zk;
  }
  return rep;
}

Replication simulate_replication(const ModelConfig& config, RngStream& rng) {
  ReplicationDraws draws = draw_replication_inputs(config, rng);
  DiscountPath path(config.discount, merged_claim_times(draws), config.horizon, rng);
  return assemble_replication(config, draws, path);
}

std::vector<double> BatchResult::z_column(std::size_t k) const {
  if (k >= num_lines) throw std::domain_error("z_column: line index out of range");
  std::vector<double> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = z[i * num_lines + k];
  return col;
}

std::uint64_t BatchResult::sample_digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  mix(z.data(), z.size() * sizeof(double));
  mix(d_total.data(), d_total.size() * sizeof(double));
  mix(s_aggregate.data(), s_aggregate.size() * sizeof(double));
  mix(claim_count.data(), claim_count.size() * sizeof(std::uint32_t));
  return h;
}

BatchResult run_batch(const ModelConfig& config, std::size_t n, std::uint64_t seed,
                      unsigned workers) {
  check_simulatable(config);
  auto t0 = std::chrono::steady_clock::now();

  BatchResult batch;
  batch.seed = seed;
  batch.config_digest = config.digest();
  batch.num_lines = config.lines.size();
  batch.n = n;
  batch.horizon = config.horizon;
  batch.z.resize(n * batch.num_lines);
  batch.d_total.resize(n);
  batch.s_aggregate.resize(n);
  batch.claim_count.resize(n);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  auto body = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      RngStream rng(seed, i);
      Replication rep = simulate_replication(config, rng);
      std::copy(rep.z.begin(), rep.z.end(), batch.z.begin() + static_cast<std::ptrdiff_t>(i * batch.num_lines));
      batch.d_total[i] = rep.d_total;
      batch.s_aggregate[i] = rep.s_aggregate;
      batch.claim_count[i] = static_cast<std::uint32_t>(rep.claim_count);
    }
  };

  if (workers <= 1) {
    body(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = n * w / workers;
      std::size_t hi = n * (w + 1) / workers;
      pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  batch.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return batch;
}

}  // namespace sysrisk
