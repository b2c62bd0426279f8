#include "kpmod/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace kp {

namespace fs = std::filesystem;

std::string fnv1a64_hex(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Cache::Cache() {
  const char* env = std::getenv("KPCAT_CACHE_DIR");
  dir_ = env && *env ? env : ".kpcat-cache";
}

Cache::Cache(std::string dir) : dir_(std::move(dir)) {}

std::string Cache::path_for(const std::string& key) const {
  return dir_ + "/" + fnv1a64_hex(key) + ".json";
}

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.at("format").get<int>() != kCacheFormat) return std::nullopt;
    if (doc.at("key").get<std::string>() != key) return std::nullopt;
    std::string payload = doc.at("payload").dump();
    if (doc.at("checksum").get<std::string>() != fnv1a64_hex(payload))
      return std::nullopt;
    return doc.at("payload");
  } catch (...) {
    return std::nullopt;
  }
}

void Cache::put(const std::string& key, const nlohmann::json& payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  nlohmann::json doc = {{"format", kCacheFormat},
                        {"key", key},
                        {"checksum", fnv1a64_hex(payload.dump())},
                        {"payload", payload}};
  std::string tmp = path_for(key) + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << doc.dump();
  }
  fs::rename(tmp, path_for(key), ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace kp
