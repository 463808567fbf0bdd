#include "patav/cache.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace patav {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json stat_value_to_json(const StatValue& v) {
  if (const auto* s = std::get_if<std::int64_t>(&v)) return *s;
  return std::get<PositionSet>(v);
}

StatValue stat_value_from_json(const json& j) {
  if (j.is_array()) return j.get<PositionSet>();
  return j.get<std::int64_t>();
}

json joint_to_json(const JointDist& d) {
  json stats = json::array();
  for (Stat s : d.stats) stats.push_back(std::string(to_string(s)));
  json records = json::array();
  for (const auto& [key, c] : d.counts) {
    json k = json::array();
    for (const auto& v : key) k.push_back(stat_value_to_json(v));
    records.push_back({{"key", k}, {"count", c.str()}});
  }
  return {{"stats", stats}, {"records", records}};
}

JointDist joint_from_json(const json& j) {
  JointDist d;
  for (const auto& s : j.at("stats")) {
    auto st = parse_stat(s.get<std::string>());
    if (!st) throw std::runtime_error("unknown statistic in cache payload");
    d.stats.push_back(*st);
  }
  for (const auto& r : j.at("records")) {
    StatKey key;
    for (const auto& v : r.at("key")) key.push_back(stat_value_from_json(v));
    if (key.size() != d.stats.size()) throw std::runtime_error("record arity mismatch");
    d.counts[key] = BigInt(r.at("count").get<std::string>());
  }
  return d;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

std::string cache_key(const FamilySpec& spec, const std::vector<Stat>& stats) {
  std::string k = spec.canonical() + ";stats=";
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (i) k += ',';
    k += to_string(stats[i]);
  }
  return k;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  return dir_ / os.str();
}

std::optional<JointDist> ResultCache::get(const std::string& key) {
  last_error_.clear();
  const auto path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    if (doc.at("key").get<std::string>() != key) return std::nullopt;  // hash collision
    if (doc.at("version").get<std::string>() != version_) return std::nullopt;
    return joint_from_json(doc.at("payload"));
  } catch (const std::exception& e) {
    last_error_ = "corrupt cache entry " + path.string() + ": " + e.what();
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, const JointDist& result) {
  last_error_.clear();
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    last_error_ = "cannot create cache directory " + dir_.string() + ": " + ec.message();
    return;
  }
  const json doc = {{"key", key}, {"version", version_}, {"created", utc_now()}, {"payload", joint_to_json(result)}};
  const auto final_path = path_for(key);
  std::random_device rd;
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << doc.dump(1) << '\n';
    if (!out) {
      last_error_ = "cannot write cache entry " + tmp.string();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    last_error_ = "cannot publish cache entry " + final_path.string() + ": " + ec.message();
    std::filesystem::remove(tmp, ec);
  }
}

}  // namespace patav
