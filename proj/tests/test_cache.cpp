#include <doctest.h>

#include "patav/cache.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace patav;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("patav-cache-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

FamilySpec inv_spec(int n) {
  FamilySpec s;
  s.family = Family::Inv;
  s.n = n;
  s.avoid = Pattern::parse_list("0021");
  return s;
}

}  // namespace

TEST_CASE("cache: round trip, misses and invalidation") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  const auto spec = inv_spec(5);
  const auto key = cache_key(spec, {Stat::Asc, Stat::Dist});
  CHECK_FALSE(cache.get(key).has_value());

  const auto jd = joint_distribution(spec, {Stat::Asc, Stat::Dist});
  cache.put(key, jd);
  const auto back = cache.get(key);
  REQUIRE(back.has_value());
  CHECK(*back == jd);

  // set-valued keys survive too
  FamilySpec perm;
  perm.n = 4;
  const auto lk = cache_key(perm, {Stat::Lmi});
  const auto lj = joint_distribution(perm, {Stat::Lmi});
  cache.put(lk, lj);
  CHECK(cache.get(lk) == lj);

  // no temporary files left behind
  for (const auto& entry : fs::directory_iterator(tmp.path)) CHECK(entry.path().extension() == ".json");

  ResultCache other_version(tmp.path, "patav-cache-0");
  CHECK_FALSE(other_version.get(key).has_value());
}

TEST_CASE("cache: corrupt entries read as misses") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  const auto key = cache_key(inv_spec(4), {Stat::Asc});
  cache.put(key, joint_distribution(inv_spec(4), {Stat::Asc}));
  {
    std::ofstream f(cache.path_for(key), std::ios::trunc);
    f << "{ not json";
  }
  CHECK_NOTHROW(cache.get(key));
  CHECK_FALSE(cache.get(key).has_value());
  CHECK_FALSE(cache.last_error().empty());
}

TEST_CASE("cache: keys separate different requests") {
  const auto a = cache_key(inv_spec(4), {Stat::Asc});
  CHECK(a == cache_key(inv_spec(4), {Stat::Asc}));
  CHECK(a != cache_key(inv_spec(5), {Stat::Asc}));
  CHECK(a != cache_key(inv_spec(4), {Stat::Dist}));
  CHECK(a != cache_key(inv_spec(4), {Stat::Asc, Stat::Dist}));
}
