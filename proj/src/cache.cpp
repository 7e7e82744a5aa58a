#include "fsq/cache.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <unistd.h>

namespace fsq {

namespace {

constexpr char kMagic[4] = {'F', 'S', 'Q', 'C'};
constexpr uint32_t kVersion = 1;

struct Header {
  char magic[4];
  uint32_t version;
  uint64_t rho;
  uint64_t bound;
};

std::optional<std::pair<uint64_t, std::vector<uint8_t>>> load(
    const std::string& path, uint64_t rho) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Header h{};
  if (!in.read(reinterpret_cast<char*>(&h), sizeof(h))) {
    std::cerr << "warning: cache file truncated, recomputing: " << path << "\n";
    return std::nullopt;
  }
  if (std::memcmp(h.magic, kMagic, 4) != 0 || h.version != kVersion ||
      h.rho != rho) {
    std::cerr << "warning: cache file not usable (format/version mismatch), "
                 "recomputing: "
              << path << "\n";
    return std::nullopt;
  }
  std::vector<uint8_t> kvals(h.bound + 1);
  if (!in.read(reinterpret_cast<char*>(kvals.data()),
               static_cast<std::streamsize>(kvals.size()))) {
    std::cerr << "warning: cache file truncated, recomputing: " << path << "\n";
    return std::nullopt;
  }
  return std::make_pair(h.bound, std::move(kvals));
}

void store(const std::string& dir, const std::string& path, uint64_t rho,
           uint64_t bound, const std::vector<uint8_t>& kvals) {
  std::filesystem::create_directories(dir);
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + tmp);
    Header h{};
    std::memcpy(h.magic, kMagic, 4);
    h.version = kVersion;
    h.rho = rho;
    h.bound = bound;
    out.write(reinterpret_cast<const char*>(&h), sizeof(h));
    out.write(reinterpret_cast<const char*>(kvals.data()),
              static_cast<std::streamsize>(kvals.size()));
    if (!out) throw std::runtime_error("cache write failed: " + tmp);
  }
  // Atomic publish: the last complete write wins.
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::string cache_file_path(const std::string& dir, uint64_t rho) {
  return (std::filesystem::path(dir) /
          ("sweep-rho" + std::to_string(rho) + ".fsqc"))
      .string();
}

SweepReport cache_get_or_compute(ForbiddenValue rho, uint64_t bound,
                                 const std::string& dir,
                                 const SweepConfig& config) {
  std::string path = cache_file_path(dir, rho.value);
  if (auto hit = load(path, rho.value)) {
    if (hit->first >= bound)
      return report_from_kvals(rho, bound, std::move(hit->second), config.jobs);
  }
  SweepReport report = sweep(rho, bound, config);
  store(dir, path, rho.value, bound, report.kvals);
  return report;
}

}  // namespace fsq
