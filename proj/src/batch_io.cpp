#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "sysrisk/simulate.hpp"

namespace sysrisk {

namespace {

constexpr char kMagic[8] = {'S', 'R', 'S', 'K', 'B', 'A', 'T', '1'};
constexpr std::uint32_t kVersion = 1;

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

template <typename T>
void write_raw(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
void write_vec(std::ofstream& out, const std::vector<T>& v) {
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
void read_raw(std::ifstream& in, T& v) {
  in.read(reinterpret_cast<char*>(&v), sizeof v);
}

template <typename T>
void read_vec(std::ifstream& in, std::vector<T>& v) {
  in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

}  // namespace

void save_batch(const BatchResult& batch, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_batch: cannot open " + path);
    out.write(kMagic, sizeof kMagic);
    write_raw(out, kVersion);
    write_raw(out, static_cast<std::uint32_t>(batch.num_lines));
    write_raw(out, static_cast<std::uint64_t>(batch.n));
    write_raw(out, batch.seed);
    write_raw(out, batch.config_digest);
    write_raw(out, batch.horizon);
    write_vec(out, batch.z);
    write_vec(out, batch.d_total);
    write_vec(out, batch.s_aggregate);
    write_vec(out, batch.claim_count);
    if (!out) throw std::runtime_error("save_batch: short write to " + path);
  }

  nlohmann::json meta{
      {"format", "sysrisk-batch"},
      {"version", kVersion},
      {"n", batch.n},
      {"num_lines", batch.num_lines},
      {"seed", batch.seed},
      {"horizon", batch.horizon},
      {"config_digest", hex64(batch.config_digest)},
      {"sample_digest", hex64(batch.sample_digest())},
      {"wall_seconds", batch.wall_seconds},
      {"created_unix", std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count()},
      {"layout",
       "magic[8] u32 version u32 num_lines u64 n u64 seed u64 config_digest f64 horizon; "
       "f64 z[n*num_lines] row-major; f64 d_total[n]; f64 s_aggregate[n]; u32 claim_count[n]; "
       "little-endian"},
  };
  std::ofstream side(path + ".meta.json");
  if (!side) throw std::runtime_error("save_batch: cannot open " + path + ".meta.json");
  side << meta.dump(2) << "\n";
}

BatchResult load_batch(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_batch: cannot open " + path);
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || !std::equal(magic, magic + 8, kMagic))
    throw std::runtime_error("load_batch: bad magic in " + path);
  std::uint32_t version = 0, num_lines = 0;
  read_raw(in, version);
  if (version != kVersion) throw std::runtime_error("load_batch: unsupported version");
  read_raw(in, num_lines);
  std::uint64_t n = 0;
  read_raw(in, n);

  BatchResult batch;
  batch.num_lines = num_lines;
  batch.n = static_cast<std::size_t>(n);
  read_raw(in, batch.seed);
  read_raw(in, batch.config_digest);
  read_raw(in, batch.horizon);
  batch.z.resize(batch.n * batch.num_lines);
  batch.d_total.resize(batch.n);
  batch.s_aggregate.resize(batch.n);
  batch.claim_count.resize(batch.n);
  read_vec(in, batch.z);
  read_vec(in, batch.d_total);
  read_vec(in, batch.s_aggregate);
  read_vec(in, batch.claim_count);
  if (!in) throw std::runtime_error("load_batch: truncated file " + path);
  return batch;
}

}  // namespace sysrisk
