// On-disk cache for expensive artifacts. Entries are keyed by operation +
// canonical arguments + format version; writes go through a temp file and a
// rename, and payloads carry a checksum that is verified on load.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace kp {

inline constexpr int kCacheFormat = 1;

class Cache {
 public:
  // Directory from KPCAT_CACHE_DIR, default ".kpcat-cache".
  Cache();
  explicit Cache(std::string dir);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& payload) const;
  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
  std::string path_for(const std::string& key) const;
};

std::string fnv1a64_hex(const std::string& data);

}  // namespace kp
