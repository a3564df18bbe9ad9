#include "cires/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cires/hash.hpp"

namespace cires {

using nlohmann::json;

ResultCache::ResultCache(std::filesystem::path dir, std::string version, std::ostream* warn)
    : dir_(std::move(dir)), version_(std::move(version)), warn_(warn) {}

std::filesystem::path ResultCache::entry_path(const std::string& key) const {
  return dir_ / key.substr(0, 2) / (key + ".json");
}

std::optional<CachedResult> ResultCache::get(const std::string& key) const {
  const auto path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  auto corrupt = [&](const std::string& why) -> std::optional<CachedResult> {
    if (warn_) *warn_ << "warning: ignoring corrupt cache entry " << path.string() << " (" << why << ")\n";
    return std::nullopt;
  };
  json entry;
  try {
    entry = json::parse(ss.str());
  } catch (const json::exception&) {
    return corrupt("unparsable");
  }
  if (!entry.is_object() || !entry.contains("version") || !entry["version"].is_string())
    return corrupt("missing version");
  if (entry["version"] != version_) return std::nullopt;
  if (!entry.contains("key") || entry["key"] != key) return corrupt("key mismatch");
  if (!entry.contains("artifact") || !entry["artifact"].is_string() || !entry.contains("sha256") ||
      !entry.contains("exit_code") || !entry["exit_code"].is_number_integer())
    return corrupt("missing fields");
  CachedResult r{entry["artifact"].get<std::string>(), entry["exit_code"].get<int>()};
  if (entry["sha256"] != sha256_hex(r.artifact)) return corrupt("checksum mismatch");
  return r;
}

void ResultCache::put(const std::string& key, const CachedResult& value) const {
  static std::atomic<unsigned> counter{0};
  const auto path = entry_path(key);
  std::filesystem::create_directories(path.parent_path());
  json entry{{"version", version_},
             {"key", key},
             {"exit_code", value.exit_code},
             {"artifact", value.artifact},
             {"sha256", sha256_hex(value.artifact)}};
  auto tmp = path.parent_path() /
             (key + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump();
    if (!out) {
      std::filesystem::remove(tmp);
      if (warn_) *warn_ << "warning: could not write cache entry " << path.string() << "\n";
      return;
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cires
