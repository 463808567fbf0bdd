#include "patav/enumerate.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace patav {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 4> kFamilyNames{{
    {Family::Perm, "perm"},
    {Family::Inv, "inv"},
    {Family::InvP, "invp"},
    {Family::WordMax, "word"},
}};

constexpr std::array<std::pair<Stat, std::string_view>, 14> kStatNames{{
    {Stat::Asc, "asc"},   {Stat::Des, "des"}, {Stat::Ides, "ides"}, {Stat::Iasc, "iasc"}, {Stat::Exc, "exc"},
    {Stat::Inv, "inv"},   {Stat::Dist, "dist"}, {Stat::Iar, "iar"}, {Stat::Tig, "tig"},   {Stat::Lar, "lar"},
    {Stat::Sma, "sma"},   {Stat::Alt, "alt"}, {Stat::Rma, "rma"},   {Stat::Lmi, "lmi"},
}};

}  // namespace

std::string_view to_string(Family f) {
  for (auto [k, v] : kFamilyNames)
    if (k == f) return v;
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (auto [k, v] : kFamilyNames)
    if (v == s) return k;
  return std::nullopt;
}

std::string_view to_string(Stat s) {
  for (auto [k, v] : kStatNames)
    if (k == s) return v;
  return "?";
}

std::optional<Stat> parse_stat(std::string_view s) {
  for (auto [k, v] : kStatNames)
    if (v == s) return k;
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (n < 1) throw DomainError("n must be >= 1");
  if (family == Family::InvP && p < 1) throw DomainError("family invp needs p >= 1");
  if (family == Family::WordMax && max_entry < 0)
    throw DomainError("family word needs a maximum entry (the unrestricted family is infinite)");
  const bool perm = family == Family::Perm;
  if (!perm && (refine.alt || refine.lr_class))
    throw DomainError("alt and L/R class refinements apply to permutations only");
  if (perm && (refine.sma || refine.min_entry_zero))
    throw DomainError("sma refinements apply to sequences only");
  if (refine.iar && family != Family::Inv) throw DomainError("iar refinement applies to family inv only");
  if (refine.iar && *refine.iar < 1) throw DomainError("iar must be >= 1");
}

int FamilySpec::bound(int i) const {
  switch (family) {
    case Family::Perm: return n + 1;
    case Family::Inv: return i + 1;
    case Family::InvP: return i == 0 ? p : p + i + 1;
    case Family::WordMax: return max_entry + 1;
  }
  return 0;
}

std::string FamilySpec::canonical() const {
  std::ostringstream os;
  os << to_string(family) << ";n=" << n;
  if (family == Family::InvP) os << ";p=" << p;
  if (family == Family::WordMax) os << ";max=" << max_entry;
  os << ";avoid=";
  for (std::size_t i = 0; i < avoid.size(); ++i) {
    if (i) os << ',';
    os << (avoid[i].kind() == PatternKind::Perm ? "P" : "W") << avoid[i].to_string();
  }
  if (refine.alt) os << ";alt=" << *refine.alt;
  if (refine.lr_class) os << ";class=" << static_cast<char>(*refine.lr_class);
  if (refine.iar) os << ";iar=" << *refine.iar;
  if (refine.sma) os << ";sma=" << *refine.sma;
  if (refine.min_entry_zero) os << ";minzero";
  return os.str();
}

void check_stat_applies(Stat s, const FamilySpec& spec) {
  const bool perm = spec.is_permutation();
  switch (s) {
    case Stat::Asc:
    case Stat::Des:
    case Stat::Lar:
    case Stat::Sma:
      return;
    case Stat::Ides:
    case Stat::Iasc:
    case Stat::Exc:
    case Stat::Inv:
    case Stat::Alt:
    case Stat::Rma:
    case Stat::Lmi:
      if (!perm) throw DomainError("statistic " + std::string(to_string(s)) + " is defined on permutations only");
      return;
    case Stat::Dist:
      if (perm) throw DomainError("statistic dist is defined on sequences only");
      return;
    case Stat::Iar:
      if (spec.family != Family::Inv) throw DomainError("statistic iar is defined on family inv only");
      return;
    case Stat::Tig:
      if (spec.family != Family::Inv && spec.family != Family::InvP)
        throw DomainError("statistic tig needs a bounded shape (inv or invp)");
      return;
  }
}

StatValue evaluate(Stat s, const FamilySpec& spec, std::span<const int> word) {
  auto scalar = [](int v) { return StatValue{static_cast<std::int64_t>(v)}; };
  switch (s) {
    case Stat::Asc: return scalar(asc_des(word).asc);
    case Stat::Des: return scalar(asc_des(word).des);
    case Stat::Lar: return scalar(lar_sma(word).lar);
    case Stat::Sma: return scalar(lar_sma(word).sma);
    case Stat::Dist: return scalar(dist(word));
    case Stat::Iar: return scalar(iar(ShapedSequence::inversion({word.begin(), word.end()})));
    case Stat::Tig: {
      std::vector<int> shape(word.size());
      for (std::size_t i = 0; i < word.size(); ++i) shape[i] = spec.bound(static_cast<int>(i));
      return scalar(tig(ShapedSequence({word.begin(), word.end()}, std::move(shape))));
    }
    default: break;
  }
  const Permutation p({word.begin(), word.end()});
  switch (s) {
    case Stat::Ides: return scalar(ides(p));
    case Stat::Iasc: return scalar(iasc(p));
    case Stat::Exc: return scalar(exc(p));
    case Stat::Inv: return scalar(inversions(p));
    case Stat::Alt: return scalar(alt(p));
    case Stat::Rma: return scalar(rma(p));
    case Stat::Lmi: return StatValue{lmi(p)};
    default: break;
  }
  throw DomainError("unhandled statistic");
}

Generator::Generator(FamilySpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  const auto n = static_cast<std::size_t>(spec_.n);
  word_.assign(n, 0);
  next_cand_.assign(n, 0);
  used_.assign(n + 2, false);
}

Generator::Generator(FamilySpec spec, int first_entry) : Generator(std::move(spec)) { first_ = first_entry; }

int Generator::candidate_limit(int depth) const {
  if (depth == 0 && first_) return *first_ + 1;
  if (spec_.refine.iar) {
    const int p = *spec_.refine.iar;
    if (depth < p) return depth + 1;
    if (depth == p) return p;  // e_{p+1} != p
  }
  return spec_.bound(depth);
}

namespace {

int lowest_candidate(const FamilySpec& spec, const std::optional<int>& first, int depth) {
  if (depth == 0 && first) return *first;
  if (spec.refine.iar && depth < *spec.refine.iar) return depth;
  return spec.is_permutation() ? 1 : 0;
}

}  // namespace

bool Generator::prune(int depth) const {
  if (spec_.avoid.empty()) return false;
  return any_occurs_ending_at_last(std::span<const int>(word_.data(), static_cast<std::size_t>(depth) + 1),
                                   spec_.avoid);
}

bool Generator::accept_full() const {
  const auto& r = spec_.refine;
  if (spec_.is_permutation()) {
    if (r.alt || r.lr_class) {
      const Permutation p(word_);
      if (r.alt && alt(p) != *r.alt) return false;
      if (r.lr_class) {
        if (p.size() < 2) return false;
        if (lr_word(p).letters().front() != *r.lr_class) return false;
      }
    }
    return true;
  }
  if (r.iar && iar(ShapedSequence::inversion(word_)) != *r.iar) return false;
  if (r.sma || r.min_entry_zero) {
    const int m = *std::min_element(word_.begin(), word_.end());
    if (r.sma && m != *r.sma) return false;
    if (r.min_entry_zero && m != 0) return false;
  }
  return true;
}

bool Generator::advance() {
  const int n = spec_.n;
  const bool perm = spec_.is_permutation();
  while (depth_ >= 0) {
    const int d = depth_;
    const int limit = candidate_limit(d);
    int c = next_cand_[static_cast<std::size_t>(d)];
    if (perm)
      while (c < limit && used_[static_cast<std::size_t>(c)]) ++c;
    if (c >= limit) {
      --depth_;
      if (depth_ >= 0 && perm) used_[static_cast<std::size_t>(word_[static_cast<std::size_t>(depth_)])] = false;
      continue;
    }
    word_[static_cast<std::size_t>(d)] = c;
    next_cand_[static_cast<std::size_t>(d)] = c + 1;
    ++nodes_;
    if (prune(d)) continue;
    if (d == n - 1) {
      if (accept_full()) return true;
      continue;
    }
    if (perm) used_[static_cast<std::size_t>(c)] = true;
    depth_ = d + 1;
    next_cand_[static_cast<std::size_t>(depth_)] = lowest_candidate(spec_, first_, depth_);
  }
  done_ = true;
  return false;
}

std::optional<std::span<const int>> Generator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    depth_ = 0;
    next_cand_[0] = lowest_candidate(spec_, first_, 0);
  }
  if (!advance()) return std::nullopt;
  return std::span<const int>(word_);
}

std::vector<int> first_entry_values(const FamilySpec& spec) {
  spec.validate();
  std::vector<int> out;
  if (spec.refine.iar) return {0};
  const int lo = spec.is_permutation() ? 1 : 0;
  for (int v = lo; v < spec.bound(0); ++v) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> generate(const FamilySpec& spec, int jobs) {
  auto parts = run_partitioned<std::vector<std::vector<int>>>(spec, jobs, [&](int first) {
    std::vector<std::vector<int>> out;
    Generator g(spec, first);
    while (auto w = g.next()) out.emplace_back(w->begin(), w->end());
    return out;
  });
  std::vector<std::vector<int>> all;
  for (auto& part : parts)
    for (auto& w : part) all.push_back(std::move(w));
  return all;
}

std::vector<std::vector<int>> generate_filtered(const FamilySpec& spec) {
  FamilySpec unrestricted = spec;
  unrestricted.avoid.clear();
  std::vector<std::vector<int>> out;
  Generator g(unrestricted);
  while (auto w = g.next())
    if (avoids_all(*w, spec.avoid)) out.emplace_back(w->begin(), w->end());
  return out;
}

void for_each_member(const FamilySpec& spec, const std::function<void(std::span<const int>)>& visit) {
  Generator g(spec);
  while (auto w = g.next()) visit(*w);
}

BigInt count(const FamilySpec& spec, int jobs) {
  auto parts = run_partitioned<BigInt>(spec, jobs, [&](int first) {
    BigInt c = 0;
    Generator g(spec, first);
    while (g.next()) ++c;
    return c;
  });
  BigInt total = 0;
  for (const auto& c : parts) total += c;
  return total;
}

BigInt JointDist::total() const {
  BigInt t = 0;
  for (const auto& [k, c] : counts) t += c;
  return t;
}

DistPoly JointDist::marginal(std::size_t i) const {
  if (i >= stats.size() || is_set_valued(stats[i])) throw DomainError("marginal needs a scalar statistic");
  DistPoly d;
  for (const auto& [key, c] : counts) d.add_to(static_cast<std::size_t>(std::get<std::int64_t>(key[i])), c);
  return d;
}

JointDist joint_distribution(const FamilySpec& spec, const std::vector<Stat>& stats, int jobs) {
  if (stats.empty()) throw DomainError("joint distribution needs at least one statistic");
  for (Stat s : stats) check_stat_applies(s, spec);
  using Counts = std::map<StatKey, BigInt>;
  auto parts = run_partitioned<Counts>(spec, jobs, [&](int first) {
    Counts c;
    Generator g(spec, first);
    while (auto w = g.next()) {
      StatKey key;
      key.reserve(stats.size());
      for (Stat s : stats) key.push_back(evaluate(s, spec, *w));
      ++c[key];
    }
    return c;
  });
  JointDist jd{stats, {}};
  for (const auto& part : parts)
    for (const auto& [k, c] : part) jd.counts[k] += c;
  return jd;
}

DistPoly distribution(const FamilySpec& spec, Stat stat, int jobs) {
  if (is_set_valued(stat)) throw DomainError("set-valued statistic; use joint_distribution");
  return joint_distribution(spec, {stat}, jobs).marginal(0);
}

}  // namespace patav
