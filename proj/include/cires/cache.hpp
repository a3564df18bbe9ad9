#ifndef CIRES_CACHE_HPP
#define CIRES_CACHE_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace cires {

struct CachedResult {
  std::string artifact;
  int exit_code = 0;
};

/// Content-addressed store: one JSON file per key under dir/<key[0:2]>/.
/// Entries carry a version stamp and an artifact checksum. A version
/// mismatch is a silent miss; an unreadable or inconsistent entry is a miss
/// with a warning on `warn`.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string version, std::ostream* warn = nullptr);

  std::optional<CachedResult> get(const std::string& key) const;
  /// Write to a temporary file in the target directory, then rename.
  void put(const std::string& key, const CachedResult& value) const;

  std::filesystem::path entry_path(const std::string& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::ostream* warn_;
};

}  // namespace cires

#endif
