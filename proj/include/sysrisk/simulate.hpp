#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sysrisk/model.hpp"
#include "sysrisk/rng.hpp"

namespace sysrisk {

// Raw randomness for one replication, split so tests can stub the pieces.
// Streams are indexed 2k (x-claims) and 2k+1 (y-claims) for line k; the
// canonical claim order is stream-major, ascending arrival time within a
// stream. copula_uniforms follows that canonical order.
struct ReplicationDraws {
  std::vector<std::uint64_t> counts;               // per stream
  std::vector<std::vector<double>> arrival_times;  // per stream, ascending
  std::vector<double> copula_uniforms;             // canonical order; empty iff no claims
};

struct Replication {
  std::vector<double> z;     // discounted net loss per line
  double d_total = 0.0;      // sum of z
  double s_aggregate = 0.0;  // discounted aggregate claim amount (no premiums)
  std::uint64_t claim_count = 0;
};

// Draw order (fixed contract): per stream a Poisson count then that many
// U(0, horizon) arrivals; then, if any claims occurred, one logarithmic
// frailty followed by one Exp(1) per claim for the Frank copula uniforms.
// The discount path (if random) draws after all of the above.
ReplicationDraws draw_replication_inputs(const ModelConfig& config, RngStream& rng);

// All claim times of the draws merged ascending (stable in canonical order).
std::vector<double> merged_claim_times(const ReplicationDraws& draws);

// Deterministic assembly of a replication from its draws and a discount path
// built over merged_claim_times(draws):
//   Z_k = sum_j e^{-R_{s_j}} X_j - premium_rate_k * int_0^t e^{-R_s} ds.
Replication assemble_replication(const ModelConfig& config, const ReplicationDraws& draws,
                                 const DiscountPath& path);

Replication simulate_replication(const ModelConfig& config, RngStream& rng);

struct BatchResult {
  std::uint64_t seed = 0;
  std::uint64_t config_digest = 0;
  std::size_t num_lines = 0;
  std::size_t n = 0;
  double horizon = 0.0;
  std::vector<double> z;                   // n * num_lines, replication-major
  std::vector<double> d_total;             // n
  std::vector<double> s_aggregate;         // n
  std::vector<std::uint32_t> claim_count;  // n
  double wall_seconds = 0.0;               // informational; not digested

  std::vector<double> z_column(std::size_t k) const;
  // FNV-1a over the raw bytes of z, d_total, s_aggregate, claim_count.
  std::uint64_t sample_digest() const;
};

// Replication i always uses RngStream(seed, i), so results are bit-identical
// for any worker count. workers == 0 picks the hardware concurrency.
BatchResult run_batch(const ModelConfig& config, std::size_t n, std::uint64_t seed,
                      unsigned workers = 0);

// Binary sample dump plus a JSON metadata sidecar at path + ".meta.json".
void save_batch(const BatchResult& batch, const std::string& path);
BatchResult load_batch(const std::string& path);

}  // namespace sysrisk
