#pragma once

#include "patav/core.hpp"
#include "patav/patterns.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patav {

enum class Family {
  Perm,      // S_n
  Inv,       // I_n, shape (1, 2, ..., n)
  InvP,      // I_{n,p}, shape (p, p+2, ..., p+n)
  WordMax,   // N_n restricted to entries <= max_entry
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

/// Optional filters on top of pattern avoidance.
struct Refinements {
  std::optional<int> alt;           // permutations: alt(pi) == value
  std::optional<Side> lr_class;     // permutations: first letter of the L/R word
  std::optional<int> iar;           // Inv: initial ascending run == value
  std::optional<int> sma;           // sequences: minimum entry == value
  bool min_entry_zero = false;      // sequences: minimum entry is 0

  friend bool operator==(const Refinements&, const Refinements&) = default;
};

struct FamilySpec {
  Family family = Family::Perm;
  int n = 1;
  int p = 0;          // InvP only
  int max_entry = -1; // WordMax only
  std::vector<Pattern> avoid;
  Refinements refine;

  /// Throws DomainError for an unusable spec.
  void validate() const;
  /// Exclusive upper bound on the entry at 0-based position i. Permutations
  /// report n + 1 (values are 1..n); WordMax reports max_entry + 1.
  int bound(int i) const;
  bool is_permutation() const { return family == Family::Perm; }
  /// Stable textual form, used for cache keys.
  std::string canonical() const;
};

enum class Stat { Asc, Des, Ides, Iasc, Exc, Inv, Dist, Iar, Tig, Lar, Sma, Alt, Rma, Lmi };

std::string_view to_string(Stat s);
std::optional<Stat> parse_stat(std::string_view s);
inline bool is_set_valued(Stat s) { return s == Stat::Lmi; }
/// Throws DomainError when the statistic is undefined on the family.
void check_stat_applies(Stat s, const FamilySpec& spec);
StatValue evaluate(Stat s, const FamilySpec& spec, std::span<const int> word);

/// Lexicographic depth-first generator with avoidance pruning. Single owner;
/// the returned span stays valid until the next call to next().
class Generator {
 public:
  explicit Generator(FamilySpec spec);
  /// Restricts the first entry to a single value (for partitioned runs).
  Generator(FamilySpec spec, int first_entry);

  std::optional<std::span<const int>> next();

  /// Counts of visited prefixes, for diagnostics.
  std::size_t nodes_visited() const { return nodes_; }

 private:
  bool advance();
  bool accept_full() const;
  int candidate_limit(int depth) const;  // exclusive
  bool prune(int depth) const;

  FamilySpec spec_;
  std::optional<int> first_;
  std::vector<int> word_;
  std::vector<int> next_cand_;
  std::vector<bool> used_;
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::size_t nodes_ = 0;
};

/// Candidate values for the first entry, in increasing order.
std::vector<int> first_entry_values(const FamilySpec& spec);

std::vector<std::vector<int>> generate(const FamilySpec& spec, int jobs = 1);
/// Full generation of the family with no pruning, filtered afterwards.
std::vector<std::vector<int>> generate_filtered(const FamilySpec& spec);
/// Calls visit(word) for every member, in lexicographic order.
void for_each_member(const FamilySpec& spec, const std::function<void(std::span<const int>)>& visit);
BigInt count(const FamilySpec& spec, int jobs = 1);

using StatKey = std::vector<StatValue>;
/// Exact joint counts keyed by statistic tuples.
struct JointDist {
  std::vector<Stat> stats;
  std::map<StatKey, BigInt> counts;

  BigInt total() const;
  /// Marginal distribution of the scalar statistic at index i.
  DistPoly marginal(std::size_t i) const;
  friend bool operator==(const JointDist&, const JointDist&) = default;
};

DistPoly distribution(const FamilySpec& spec, Stat stat, int jobs = 1);
JointDist joint_distribution(const FamilySpec& spec, const std::vector<Stat>& stats, int jobs = 1);

/// Runs `work(first_entry)` for each depth-1 partition on up to `jobs`
/// threads; results are returned in partition order.
template <typename R>
std::vector<R> run_partitioned(const FamilySpec& spec, int jobs, const std::function<R(int)>& work);

}  // namespace patav

#include "patav/detail/partition.hpp"
