#pragma once

// Disk cache for expensive solver runs.  Entries are small JSON documents
// keyed by (command, canonical parameter dump); a content digest and the
// tool version guard against stale or truncated files.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace satlat {

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

class ResultCache {
 public:
  // Resolution order: $SATLAT_CACHE_DIR, then $HOME/.cache/satlat, then
  // ./.satlat-cache.  The directory is created lazily on first store.
  static ResultCache from_env();
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path entry_path(const std::string& command,
                                   const nlohmann::json& params) const;

  // Payload previously stored for this key.  Nullopt when absent or written
  // by a different tool version (silent) or corrupted (warns on stderr).
  std::optional<nlohmann::json> load(const std::string& command,
                                     const nlohmann::json& params) const;

  // Atomic write: temp file in the cache directory, then rename.
  void store(const std::string& command, const nlohmann::json& params,
             const nlohmann::json& payload) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace satlat
