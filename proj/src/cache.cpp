#include "satlat/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include "satlat/version.hpp"

namespace satlat {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ResultCache ResultCache::from_env() {
  if (const char* dir = std::getenv("SATLAT_CACHE_DIR"); dir && *dir)
    return ResultCache(dir);
  if (const char* home = std::getenv("HOME"); home && *home)
    return ResultCache(std::filesystem::path(home) / ".cache" / "satlat");
  return ResultCache(".satlat-cache");
}

std::filesystem::path ResultCache::entry_path(
    const std::string& command, const nlohmann::json& params) const {
  // dump() orders object keys, so equal parameter sets share a file name.
  return dir_ / (command + "-" + fnv1a_hex(params.dump()) + ".json");
}

std::optional<nlohmann::json> ResultCache::load(
    const std::string& command, const nlohmann::json& params) const {
  const auto path = entry_path(command, params);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json rec = nlohmann::json::parse(in, nullptr, false);
  if (rec.is_discarded() || !rec.is_object()) {
    std::cerr << "cache: ignoring unreadable entry " << path << "\n";
    return std::nullopt;
  }
  if (rec.value("tool_version", "") != kVersion) return std::nullopt;
  if (rec.value("command", "") != command || rec["params"] != params)
    return std::nullopt;  // digest prefix collision; just recompute
  if (!rec.contains("payload") ||
      rec.value("digest", "") != fnv1a_hex(rec["payload"].dump())) {
    std::cerr << "cache: digest mismatch, ignoring entry " << path << "\n";
    return std::nullopt;
  }
  return rec["payload"];
}

void ResultCache::store(const std::string& command,
                        const nlohmann::json& params,
                        const nlohmann::json& payload) const {
  std::error_code dir_ec;
  std::filesystem::create_directories(dir_, dir_ec);
  if (dir_ec) return;  // cache is best-effort; never fail the computation
  nlohmann::json rec = {
      {"command", command},
      {"params", params},
      {"payload", payload},
      {"digest", fnv1a_hex(payload.dump())},
      {"timestamp", utc_timestamp()},
      {"tool_version", kVersion},
  };
  const auto path = entry_path(command, params);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << rec.dump(2) << "\n";
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;  // cache is best-effort; never fail the computation
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace satlat
