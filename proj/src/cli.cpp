#include "patav/cli.hpp"

#include "patav/cache.hpp"
#include "patav/enumerate.hpp"
#include "patav/solvers.hpp"
#include "patav/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace patav {

namespace {

using json = nlohmann::ordered_json;

struct Fail {
  int code;
  std::string message;
};

int parse_int(std::string_view key, std::string_view v) {
  int out = 0;
  const auto* end = v.data() + v.size();
  const auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) throw UsageError("config key '" + std::string(key) + "': not an integer: " + std::string(v));
  return out;
}

int positive(std::string_view key, int v) {
  if (v < 1) throw UsageError("config key '" + std::string(key) + "' must be >= 1");
  return v;
}

using Setter = std::function<void(CliConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> m = [] {
    std::map<std::string, Setter> s;
    auto int_key = [&](const char* k, int CliConfig::*field) {
      s[k] = [k, field](CliConfig& c, const std::string& v) { c.*field = positive(k, parse_int(k, v)); };
    };
    int_key("order_x", &CliConfig::order_x);
    int_key("order_u", &CliConfig::order_u);
    int_key("order_s", &CliConfig::order_s);
    int_key("max_order", &CliConfig::max_order);
    int_key("max_n_perm", &CliConfig::max_n_perm);
    int_key("max_n_inv", &CliConfig::max_n_inv);
    int_key("max_n_invp", &CliConfig::max_n_invp);
    int_key("max_n_word", &CliConfig::max_n_word);
    int_key("jobs", &CliConfig::jobs);
    s["order_t"] = [](CliConfig& c, const std::string& v) { c.order_t = positive("order_t", parse_int("order_t", v)); };
    s["cache_dir"] = [](CliConfig& c, const std::string& v) { c.cache_dir = v; };
    s["format"] = [](CliConfig& c, const std::string& v) {
      if (v != "json" && v != "csv" && v != "table") throw UsageError("config key 'format' must be json, csv or table");
      c.format = v;
    };
    return s;
  }();
  return m;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

void set_key(CliConfig& cfg, const std::string& key, const std::string& value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw UsageError("unknown config key '" + key + "'");
  it->second(cfg, value);
}

// ---- output helpers ----

json count_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

json stat_value_json(const StatValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<PositionSet>(v);
}

json poly_json(const DistPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(count_json(c));
  return a;
}

// ---- family arguments shared by count and dist ----

struct FamilyArgs {
  std::string family = "perm";
  std::string avoid;
  std::string n;
  std::optional<int> p, max_entry, iar, alt, sma;
  std::optional<std::string> alt_class;
  bool min_zero = false;
};

void add_family_options(CLI::App* sub, FamilyArgs& fa) {
  sub->add_option("--family", fa.family, "Family: perm, inv, invp (I_{n,p}) or word (entries <= --max-entry)")
      ->capture_default_str();
  sub->add_option("--avoid", fa.avoid, "Comma-separated patterns, e.g. 3124,42153,24153 or 0021");
  sub->add_option("--n", fa.n, "Length N or range A..B")->required();
  sub->add_option("--p", fa.p, "Shape offset p for --family invp");
  sub->add_option("--max-entry", fa.max_entry, "Largest entry for --family word");
  sub->add_option("--iar", fa.iar, "Keep inversion sequences whose initial ascending run is exactly this");
  sub->add_option("--alt", fa.alt, "Keep permutations with this alt value");
  sub->add_option("--alt-class", fa.alt_class, "Keep permutations whose L/R word starts with L or R");
  sub->add_option("--sma", fa.sma, "Keep sequences whose smallest entry is this");
  sub->add_flag("--min-zero", fa.min_zero, "Keep sequences whose smallest entry is 0");
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {n, n};
    }
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    if (lo > hi) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Fail{kExitUsage, "--n: expected N or A..B, got '" + s + "'"};
  }
}

int family_bound(Family f, const CliConfig& cfg) {
  switch (f) {
    case Family::Perm: return cfg.max_n_perm;
    case Family::Inv: return cfg.max_n_inv;
    case Family::InvP: return cfg.max_n_invp;
    case Family::WordMax: return cfg.max_n_word;
  }
  return 0;
}

std::vector<FamilySpec> build_specs(const FamilyArgs& fa, const CliConfig& cfg) {
  const auto fam = parse_family(fa.family);
  if (!fam) throw Fail{kExitUsage, "--family: unknown family '" + fa.family + "' (perm, inv, invp, word)"};
  FamilySpec base;
  base.family = *fam;
  try {
    if (!fa.avoid.empty()) base.avoid = Pattern::parse_list(fa.avoid);
  } catch (const PatternParseError& e) {
    throw Fail{kExitUsage, std::string("--avoid: ") + e.what()};
  }
  if (fa.p) base.p = *fa.p;
  if (fa.max_entry) base.max_entry = *fa.max_entry;
  base.refine.iar = fa.iar;
  base.refine.alt = fa.alt;
  base.refine.sma = fa.sma;
  base.refine.min_entry_zero = fa.min_zero;
  if (fa.alt_class) {
    if (*fa.alt_class == "L" || *fa.alt_class == "l") base.refine.lr_class = Side::L;
    else if (*fa.alt_class == "R" || *fa.alt_class == "r") base.refine.lr_class = Side::R;
    else throw Fail{kExitUsage, "--alt-class: expected L or R"};
  }
  const auto [lo, hi] = parse_range(fa.n);
  const int bound = family_bound(*fam, cfg);
  if (hi > bound)
    throw Fail{kExitInfeasible, "n = " + std::to_string(hi) + " exceeds the configured bound " + std::to_string(bound) + " for family " +
                                    fa.family + " (config key max_n_" + fa.family + ")"};
  if (*fam == Family::InvP && base.p > bound)
    throw Fail{kExitInfeasible, "p = " + std::to_string(base.p) + " exceeds the configured bound " + std::to_string(bound)};
  if (*fam == Family::WordMax && base.max_entry > 2 * bound)
    throw Fail{kExitInfeasible, "--max-entry " + std::to_string(base.max_entry) + " exceeds " + std::to_string(2 * bound)};
  std::vector<FamilySpec> out;
  for (int n = lo; n <= hi; ++n) {
    FamilySpec s = base;
    s.n = n;
    try {
      s.validate();
    } catch (const DomainError& e) {
      throw Fail{kExitUsage, e.what()};
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Joint distribution, through the cache when one is configured. An empty
// stat list means a plain count, stored as a single record with an empty key.
JointDist compute(const FamilySpec& spec, const std::vector<Stat>& stats, const CliConfig& cfg, bool use_cache, std::ostream& err) {
  std::optional<ResultCache> cache;
  const std::string key = cache_key(spec, stats);
  if (use_cache && !cfg.cache_dir.empty()) {
    cache.emplace(cfg.cache_dir);
    auto hit = cache->get(key);
    if (!cache->last_error().empty()) err << "warning: " << cache->last_error() << '\n';
    if (hit) return *hit;
  }
  JointDist d;
  if (stats.empty()) {
    d.counts[StatKey{}] = count(spec, cfg.jobs);
  } else {
    d = joint_distribution(spec, stats, cfg.jobs);
  }
  if (cache) {
    cache->put(key, d);
    if (!cache->last_error().empty()) err << "warning: " << cache->last_error() << '\n';
  }
  return d;
}

// ---- commands ----

int cmd_count(const FamilyArgs& fa, const CliConfig& cfg, bool use_cache, std::ostream& out, std::ostream& err) {
  const auto specs = build_specs(fa, cfg);
  std::vector<std::pair<int, BigInt>> rows;
  for (const auto& s : specs) rows.emplace_back(s.n, compute(s, {}, cfg, use_cache, err).total());
  if (cfg.format == "json") {
    json a = json::array();
    for (const auto& [n, c] : rows) a.push_back({{"n", n}, {"count", count_json(c)}});
    out << a.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "n,count\n";
    for (const auto& [n, c] : rows) out << n << ',' << c << '\n';
  } else {
    for (const auto& [n, c] : rows) out << "n=" << n << "  " << c << '\n';
  }
  return kExitOk;
}

std::vector<Stat> parse_stats(const std::string& text, const FamilySpec& spec) {
  std::vector<Stat> stats;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto st = parse_stat(item);
    if (!st) throw Fail{kExitUsage, "unknown statistic '" + item + "'"};
    try {
      check_stat_applies(*st, spec);
    } catch (const DomainError& e) {
      throw Fail{kExitUsage, e.what()};
    }
    stats.push_back(*st);
  }
  if (stats.empty()) throw Fail{kExitUsage, "--stat: no statistic given"};
  return stats;
}

int cmd_dist(const FamilyArgs& fa, const std::string& stat_text, const CliConfig& cfg, bool use_cache, std::ostream& out,
             std::ostream& err) {
  const auto specs = build_specs(fa, cfg);
  const auto stats = parse_stats(stat_text, specs.front());
  const bool scalar = stats.size() == 1 && !is_set_valued(stats[0]);
  const bool has_set = std::any_of(stats.begin(), stats.end(), is_set_valued);
  if (has_set && cfg.format == "csv") throw Fail{kExitUsage, "set-valued statistics are only available with --format json"};
  const bool range = specs.size() > 1;

  json all = json::array();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const FamilySpec& s = specs[i];
    const JointDist d = compute(s, stats, cfg, use_cache, err);
    if (cfg.format == "json") {
      if (scalar) {
        all.push_back(poly_json(d.marginal(0)));
      } else {
        json names = json::array();
        for (Stat st : stats) names.push_back(std::string(to_string(st)));
        json recs = json::array();
        for (const auto& [key, c] : d.counts) {
          json k = json::array();
          for (const auto& v : key) k.push_back(stat_value_json(v));
          recs.push_back({{"key", k}, {"count", count_json(c)}});
        }
        all.push_back({{"n", s.n}, {"stats", names}, {"records", recs}});
      }
    } else if (cfg.format == "csv") {
      if (i == 0) {
        if (range) out << "n,";
        for (Stat st : stats) out << to_string(st) << ',';
        out << "count\n";
      }
      for (const auto& [key, c] : d.counts) {
        if (range) out << s.n << ',';
        for (const auto& v : key) out << csv_field(to_string(v)) << ',';
        out << c << '\n';
      }
    } else {
      if (scalar) {
        out << "n=" << s.n << ": " << d.marginal(0).to_string() << '\n';
      } else {
        out << "n=" << s.n << " (";
        for (std::size_t k = 0; k < stats.size(); ++k) out << (k ? ", " : "") << to_string(stats[k]);
        out << ")\n";
        for (const auto& [key, c] : d.counts) {
          out << "  (";
          for (std::size_t k = 0; k < key.size(); ++k) out << (k ? ", " : "") << to_string(key[k]);
          out << ")  " << c << '\n';
        }
      }
    }
  }
  if (cfg.format == "json") out << (range ? all : all.front()).dump() << '\n';
  return kExitOk;
}

json series_coeffs(const MultiSeries& s, std::size_t var, std::vector<int>& exps) {
  json a = json::array();
  for (int e = 0; e <= s.orders()[var]; ++e) {
    exps[var] = e;
    if (var + 1 == s.vars().size()) {
      json p = json::array();
      for (const auto& c : s.coeff(exps).coeffs()) p.push_back(c.str());
      a.push_back(p);
    } else {
      a.push_back(series_coeffs(s, var + 1, exps));
    }
  }
  return a;
}

int cmd_series(const std::string& id, const CliConfig& cfg, std::ostream& out) {
  for (int o : {cfg.order_x, cfg.order_u})
    if (o > cfg.max_order)
      throw Fail{kExitInfeasible, "series order " + std::to_string(o) + " exceeds max_order " + std::to_string(cfg.max_order)};
  std::optional<MultiSeries> s;
  if (id == "A") s = solve_A(cfg.order_x, cfg.order_t);
  else if (id == "r") s = solve_r(cfg.order_x, cfg.order_t);
  else if (id == "I") s = i_from_r(solve_r(cfg.order_x, cfg.order_t));
  else if (id == "N") s = solve_N(cfg.order_x, cfg.order_u, cfg.order_t);
  else throw Fail{kExitUsage, "--id: unknown series '" + id + "' (A, r, I, N)"};

  if (cfg.format == "json") {
    json vars = json::array();
    for (Var v : s->vars()) vars.push_back(std::string(1, to_char(v)));
    std::vector<int> exps(s->vars().size(), 0);
    json j;
    j["id"] = id;
    j["vars"] = vars;
    j["orders"] = s->orders();
    j["t_order"] = s->t_order() ? json(*s->t_order()) : json(nullptr);
    j["coeffs"] = series_coeffs(*s, 0, exps);
    out << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    for (Var v : s->vars()) out << to_char(v) << ',';
    out << "t,coeff\n";
    s->for_each_nonzero([&](const std::vector<int>& e, const DistPoly& p) {
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] == 0) continue;
        for (int x : e) out << x << ',';
        out << k << ',' << p.coeffs()[k] << '\n';
      }
    });
  } else {
    s->for_each_nonzero([&](const std::vector<int>& e, const DistPoly& p) {
      out << describe_exponents(s->vars(), e) << ": " << p.to_string() << '\n';
    });
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& checks, std::optional<int> max_n,
               const std::string& report, bool timing, const CliConfig& cfg, std::ostream& out) {
  std::vector<std::string> ids;
  if (!checks.empty()) {
    for (const auto& c : checks) {
      if (std::find(all_check_ids().begin(), all_check_ids().end(), c) == all_check_ids().end())
        throw Fail{kExitUsage, "unknown check id '" + c + "'"};
      ids.push_back(c);
    }
  } else {
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const auto& p) { return p.first == suite; });
    if (it == suites().end()) throw Fail{kExitUsage, "unknown suite '" + suite + "'"};
    ids = it->second;
  }
  VerifyBounds b;
  b.jobs = cfg.jobs;
  if (max_n) {
    if (*max_n < 1) throw Fail{kExitUsage, "--max-n must be >= 1"};
    b = b.capped(*max_n);
  }
  std::vector<CheckResult> results;
  for (const auto& id : ids)
    for (auto& r : run_check(id, b)) results.push_back(std::move(r));

  json arr = json::array();
  for (const auto& r : results) arr.push_back(to_json(r, timing));
  if (!report.empty()) {
    std::ofstream f(report);
    f << arr.dump(2) << '\n';
    if (!f) throw Fail{kExitUsage, "cannot write report " + report};
  }
  if (cfg.format == "json") {
    out << arr.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "id,status,conjecture,identity,index,lhs,rhs\n";
    for (const auto& r : results) {
      out << csv_field(r.id) << ',' << to_string(r.status) << ',' << (r.conjecture ? "true" : "false");
      if (r.witness)
        out << ',' << csv_field(r.witness->identity) << ',' << csv_field(r.witness->index) << ',' << csv_field(r.witness->lhs) << ','
            << csv_field(r.witness->rhs);
      else
        out << ",,,,";
      out << '\n';
    }
  } else {
    int pass = 0, fail = 0, conj_fail = 0;
    for (const auto& r : results) {
      out << to_string(r.status) << "  " << r.id << (r.conjecture ? " [conjecture-grade]" : "") << "  " << r.title;
      if (timing) out << "  (" << r.seconds << " s)";
      out << '\n';
      if (r.witness)
        out << "      first discrepancy: " << r.witness->identity << " at " << r.witness->index << ": " << r.witness->lhs << " vs "
            << r.witness->rhs << '\n';
      if (r.status == CheckStatus::Pass) ++pass;
      else if (r.status == CheckStatus::Fail) (r.conjecture ? conj_fail : fail)++;
    }
    out << "summary: " << pass << " passed, " << fail << " failed";
    if (conj_fail) out << ", " << conj_fail << " conjecture-grade failed (reported only)";
    out << '\n';
  }
  return suite_passed(results) ? kExitOk : kExitVerifyFailed;
}

std::string help_footer() {
  std::string s = "\nCheck ids:";
  for (const auto& id : all_check_ids()) s += " " + id;
  s += "\nSuites:";
  for (const auto& [name, ids] : suites()) s += " " + name;
  s += "\nStatistics:";
  for (Stat st : {Stat::Asc, Stat::Des, Stat::Ides, Stat::Iasc, Stat::Exc, Stat::Inv, Stat::Dist, Stat::Iar, Stat::Tig, Stat::Lar,
                  Stat::Sma, Stat::Alt, Stat::Rma, Stat::Lmi})
    s += " " + std::string(to_string(st));
  s += "\nConfig keys (key=value lines or a JSON object):";
  for (const auto& k : config_keys()) s += " " + k;
  s += "\nPrecedence: defaults < $" + std::string(kCacheDirEnv) + " < --config file < flags.";
  s += "\nExit codes: 0 success, 1 verification failure, 2 usage error, 3 infeasible request.\n";
  return s;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, fn] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

void apply_config_text(CliConfig& cfg, std::string_view text) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("config: invalid JSON: ") + e.what());
    }
    for (const auto& [key, v] : j.items()) {
      if (v.is_string()) set_key(cfg, key, v.get<std::string>());
      else if (v.is_number_integer()) set_key(cfg, key, std::to_string(v.get<long long>()));
      else throw UsageError("config key '" + key + "': expected a string or an integer");
    }
    return;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    set_key(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"patav: exact enumeration, distributions, series and identity checks for pattern-avoiding permutations and inversion sequences"};
  app.name("patav");
  app.set_help_flag();
  app.set_help_all_flag("-h,--help", "Print help for every command and flag, then exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(help_footer());

  std::string config_path, format, cache_dir;
  std::optional<int> jobs;
  bool no_cache = false;
  app.add_option("--config", config_path, "Config file: key=value lines or a JSON object");
  app.add_option("--format", format, "Output format: json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, std::string("Result cache directory (default: $") + kCacheDirEnv + ", else none)");
  app.add_flag("--no-cache", no_cache, "Ignore any configured cache");

  FamilyArgs count_args, dist_args;
  auto* count_cmd = app.add_subcommand("count", "Count the members of a family for each n");
  add_family_options(count_cmd, count_args);

  auto* dist_cmd = app.add_subcommand("dist", "Distribution of one statistic, or the joint distribution of several");
  add_family_options(dist_cmd, dist_args);
  std::string stat_text;
  dist_cmd->add_option("--stat,--stats", stat_text, "Statistic name, or a comma-separated list for a joint distribution")->required();

  auto* series_cmd = app.add_subcommand("series", "Truncated series solution: A, r, I = r/(1-r) or N");
  std::string series_id;
  std::optional<int> ox, ou, os, ot;
  series_cmd->add_option("--id", series_id, "Series id: A, r, I or N")->required();
  series_cmd->add_option("--order-x", ox, "Truncation order in x")->check(CLI::PositiveNumber);
  series_cmd->add_option("--order-u", ou, "Truncation order in u (N only)")->check(CLI::PositiveNumber);
  series_cmd->add_option("--order-s", os, "Truncation order in s (kept for config symmetry)")->check(CLI::PositiveNumber);
  series_cmd->add_option("--order-t", ot, "Truncation degree in t")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks; exit 1 if a non-conjecture check fails");
  std::string suite = "all", report;
  std::vector<std::string> checks;
  std::optional<int> max_n;
  bool timing = false;
  verify_cmd->add_option("--suite", suite, "Suite: all, main, lemmas, bijections, series, conjectures, facts, engineering")
      ->capture_default_str();
  verify_cmd->add_option("--check", checks, "Run only these check ids (repeatable)");
  verify_cmd->add_option("--max-n", max_n, "Cap every size bound and truncation order");
  verify_cmd->add_option("--report", report, "Also write the JSON report to this file");
  verify_cmd->add_flag("--timing", timing, "Include per-check timings (output is then not byte-stable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n(run with --help for usage)\n";
    return kExitUsage;
  }

  try {
    CliConfig cfg;
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) cfg.cache_dir = env;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw Fail{kExitUsage, "cannot read config file " + config_path};
      std::stringstream ss;
      ss << f.rdbuf();
      apply_config_text(cfg, ss.str());
    }
    if (!format.empty()) cfg.format = format;
    if (jobs) cfg.jobs = *jobs;
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (ox) cfg.order_x = *ox;
    if (ou) cfg.order_u = *ou;
    if (os) cfg.order_s = *os;
    if (ot) cfg.order_t = *ot;

    if (count_cmd->parsed()) return cmd_count(count_args, cfg, !no_cache, out, err);
    if (dist_cmd->parsed()) return cmd_dist(dist_args, stat_text, cfg, !no_cache, out, err);
    if (series_cmd->parsed()) return cmd_series(series_id, cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(suite, checks, max_n, report, timing, cfg, out);
    err << "error: no command\n";
    return kExitUsage;
  } catch (const Fail& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PatternParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  }
}

}  // namespace patav
