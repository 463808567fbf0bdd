#include <doctest.h>

#include "patav/cache.hpp"
#include "patav/cli.hpp"
#include "patav/verify.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace patav;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("patav-cli-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli: count") {
  const auto r = run({"count", "--family", "inv", "--avoid", "0021", "--n", "1..6", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<long long> got;
  for (const auto& row : j) got.push_back(row["count"].get<long long>());
  CHECK(got == std::vector<long long>{1, 2, 6, 23, 101, 480});

  const auto one = run({"count", "--family", "perm", "--avoid", "3124,42153,24153", "--n", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(one.out)[0]["count"] == 1);

  const auto six = run({"count", "--family", "perm", "--avoid", "2134,42153,24153", "--n", "6"});
  CHECK(six.code == kExitOk);
  CHECK(six.out.find("480") != std::string::npos);
}

TEST_CASE("cli: dist") {
  const auto r = run({"dist", "--family", "inv", "--avoid", "0021", "--stat", "asc", "--n", "4", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse("[1,10,11,1]"));
  const auto one = run({"dist", "--family", "inv", "--avoid", "0021", "--stat", "asc", "--n", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(one.out) == nlohmann::json::parse("[1]"));
  const auto joint = run({"dist", "--family", "perm", "--stats", "des,ides", "--n", "2", "--format", "json"});
  CHECK(joint.code == kExitOk);
  const auto jj = nlohmann::json::parse(joint.out);
  CHECK(jj["records"].size() == 2);
  // set-valued statistic cannot be written as csv
  CHECK(run({"dist", "--family", "perm", "--stat", "lmi", "--n", "3", "--format", "csv"}).code == kExitUsage);
  CHECK(run({"dist", "--family", "perm", "--stat", "lmi", "--n", "3", "--format", "json"}).code == kExitOk);
}

TEST_CASE("cli: series") {
  const auto r = run({"series", "--id", "A", "--order-x", "4", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["id"] == "A");
  CHECK(j["coeffs"][4] == nlohmann::json::parse(R"(["1","10","11","1"])"));
  const auto rr = nlohmann::json::parse(run({"series", "--id", "r", "--order-x", "5", "--format", "json"}).out);
  CHECK(rr["coeffs"][5] == nlohmann::json::parse(R"(["0","4","27","22","1"])"));
  CHECK(run({"series", "--id", "Q"}).code == kExitUsage);
}

TEST_CASE("cli: exit codes") {
  CHECK(run({"count", "--family", "perm", "--avoid", "12a", "--n", "3"}).code == kExitUsage);
  CHECK(run({"count", "--family", "perm", "--n", "40"}).code == kExitInfeasible);
  CHECK(run({"count", "--family", "nope", "--n", "3"}).code == kExitUsage);
  CHECK(run({"dist", "--family", "perm", "--stat", "bogus", "--n", "3"}).code == kExitUsage);
  CHECK(run({"verify", "--check", "no_such_check"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"series", "--id", "A", "--order-x", "500"}).code == kExitInfeasible);
}

TEST_CASE("cli: verify") {
  const auto r = run({"verify", "--check", "eq_C", "--max-n", "4", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "PASS");
  CHECK_FALSE(j[0].contains("witness"));
  const auto small = run({"verify", "--suite", "all", "--max-n", "3"});
  CHECK(small.code == kExitOk);
}

TEST_CASE("cli: output is byte-stable") {
  const std::vector<std::string> args{"dist", "--family", "perm", "--avoid", "3124,42153,24153", "--stats", "lmi,rma,ides", "--n", "5", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> v{"verify", "--suite", "main", "--max-n", "4", "--format", "json"};
  CHECK(run(v).out == run(v).out);
  auto par = args;
  par.insert(par.begin(), {"--jobs", "3"});
  CHECK(run(par).out == run(args).out);
}

TEST_CASE("cli: configuration precedence") {
  TempDir tmp;
  const auto cfg = (tmp.path / "patav.conf").string();
  {
    std::ofstream f(cfg);
    f << "# bounds\norder_x = 3\nmax_n_perm = 4\nformat = json\n";
  }
  // config beats defaults
  const auto s = nlohmann::json::parse(run({"--config", cfg, "series", "--id", "A"}).out);
  CHECK(s["orders"][0] == 3);
  // flags beat config
  const auto f = nlohmann::json::parse(run({"--config", cfg, "series", "--id", "A", "--order-x", "5"}).out);
  CHECK(f["orders"][0] == 5);
  CHECK(run({"--config", cfg, "count", "--family", "perm", "--n", "5"}).code == kExitInfeasible);
  CHECK(run({"count", "--family", "perm", "--n", "5"}).code == kExitOk);

  {
    std::ofstream f2(tmp.path / "bad.conf");
    f2 << "no_such_key = 1\n";
  }
  CHECK(run({"--config", (tmp.path / "bad.conf").string(), "count", "--family", "perm", "--n", "3"}).code == kExitUsage);
  CHECK(run({"--config", (tmp.path / "missing.conf").string(), "count", "--family", "perm", "--n", "3"}).code == kExitUsage);

  CliConfig c;
  apply_config_text(c, R"({"order_u": 4, "cache_dir": "/tmp/x"})");
  CHECK(c.order_u == 4);
  CHECK(c.cache_dir == "/tmp/x");
  CHECK_THROWS_AS(apply_config_text(c, "order_u = zero"), UsageError);
  CHECK_THROWS_AS(apply_config_text(c, R"({"bogus": 1})"), UsageError);
}

TEST_CASE("cli: cache directory from flag and environment") {
  TempDir tmp;
  const std::vector<std::string> args{"dist", "--family", "inv", "--avoid", "0021", "--stat", "asc", "--n", "5", "--format", "json"};
  auto with_flag = args;
  with_flag.insert(with_flag.begin(), {"--cache-dir", tmp.path.string()});
  const auto first = run(with_flag);
  CHECK(first.code == kExitOk);
  CHECK(std::distance(fs::directory_iterator(tmp.path), fs::directory_iterator{}) > 0);
  CHECK(run(with_flag).out == first.out);

  TempDir envdir;
  ::setenv(kCacheDirEnv, envdir.path.c_str(), 1);
  CHECK(run(args).out == first.out);
  CHECK(std::distance(fs::directory_iterator(envdir.path), fs::directory_iterator{}) > 0);
  auto no_cache = args;
  no_cache.insert(no_cache.begin(), "--no-cache");
  fs::remove_all(envdir.path);
  fs::create_directories(envdir.path);
  CHECK(run(no_cache).out == first.out);
  CHECK(fs::is_empty(envdir.path));
  ::unsetenv(kCacheDirEnv);
}

TEST_CASE("cli: help lists commands, checks, stats and config keys") {
  const auto h = run({"--help"});
  CHECK(h.code == kExitOk);
  for (const char* word : {"count", "dist", "series", "verify", "--family", "--avoid", "--stat", "--order-x", "--suite",
                           "--check", "--max-n", "--config", "--cache-dir", "--format", "--jobs"})
    CHECK_MESSAGE(h.out.find(word) != std::string::npos, word);
  for (const auto& id : all_check_ids()) CHECK_MESSAGE(h.out.find(id) != std::string::npos, id);
  for (const auto& k : config_keys()) CHECK_MESSAGE(h.out.find(k) != std::string::npos, k);
  CHECK(h.out.find("ides") != std::string::npos);
  CHECK(h.out.find(kCacheDirEnv) != std::string::npos);
}
