#pragma once

#include "patav/enumerate.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace patav {

/// Bumped whenever enumeration semantics or the payload layout change;
/// entries written under another tag read as misses.
inline constexpr const char* kCacheSchemaVersion = "patav-cache-1";

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "PATAV_CACHE_DIR";

std::string cache_key(const FamilySpec& spec, const std::vector<Stat>& stats);

/// One JSON file per key: {key, version, created, payload}. Writes go to a
/// temporary file that is then renamed into place. Any unreadable entry is
/// a miss; the reason is kept in last_error().
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir, std::string version = kCacheSchemaVersion);

  std::optional<JointDist> get(const std::string& key);
  void put(const std::string& key, const JointDist& result);

  std::filesystem::path path_for(const std::string& key) const;
  const std::string& last_error() const { return last_error_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::string last_error_;
};

}  // namespace patav
