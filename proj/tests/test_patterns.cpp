#include <doctest.h>

#include "oracles.hpp"
#include "patav/patterns.hpp"

#include <random>

using namespace patav;

namespace {
std::vector<int> letters(const Pattern& p) { return {p.letters().begin(), p.letters().end()}; }
}  // namespace

TEST_CASE("patterns: parsing") {
  const auto p = Pattern::parse("42153");
  CHECK(p.kind() == PatternKind::Perm);
  CHECK(p.to_string() == "42153");
  const auto w = Pattern::parse("0021");
  CHECK(w.kind() == PatternKind::Word);
  CHECK(w.to_string() == "0021");
  CHECK(Pattern::parse("12", PatternKind::Word).to_string() == "01");
  CHECK(Pattern::parse_list("3124,42153,24153").size() == 3);
  CHECK_THROWS_AS(Pattern::parse("12a"), PatternParseError);
  CHECK_THROWS_AS(Pattern::parse("113"), PatternParseError);  // repeated letter in a perm pattern
  CHECK_THROWS_AS(Pattern::parse(""), PatternParseError);
  try {
    Pattern::parse("1x2");
    FAIL("expected a parse error");
  } catch (const PatternParseError& e) {
    CHECK(std::string(e.what()).find('x') != std::string::npos);
  }
}

TEST_CASE("patterns: worked examples") {
  const std::vector<int> w{3, 1, 5, 6, 1, 6};
  const auto occ = first_occurrence(w, Pattern::parse("011"));
  REQUIRE(occ.has_value());
  CHECK(*occ == std::vector<int>{1, 4, 6});
  CHECK_FALSE(occurs(w, Pattern::parse("201")));
  CHECK(occurs(std::vector<int>{0, 2, 1}, Pattern::parse("021")));
  CHECK_FALSE(occurs(std::vector<int>{0, 0, 1}, Pattern::parse("021")));
}

TEST_CASE("patterns: agree with a naive subset oracle") {
  std::mt19937 rng(12345);
  const std::vector<std::string> pats{"12", "21", "231", "312", "0021", "011", "201", "000", "012",
                                      "3124", "2143", "010", "1032", "42153", "0101"};
  std::vector<Pattern> ps;
  for (const auto& s : pats) ps.push_back(Pattern::parse(s));
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = static_cast<int>(rng() % 5);
    for (const auto& p : ps) {
      const bool brute = oracle::occurs(w, letters(p));
      CHECK(occurs(w, p) == brute);
      CHECK(first_occurrence(w, p).has_value() == brute);
    }
  }
}

TEST_CASE("patterns: first occurrence is a valid lexicographically least witness") {
  const auto p = Pattern::parse("021");
  for (const auto& e : oracle::all_inversion_sequences(6)) {
    const auto occ = first_occurrence(e, p);
    if (!occ) continue;
    std::vector<int> sub;
    for (int i : *occ) sub.push_back(e[static_cast<std::size_t>(i - 1)]);
    CHECK(oracle::occurs(sub, letters(p)));
    // no lexicographically smaller triple works
    const int n = static_cast<int>(e.size());
    bool smaller = false;
    for (int a = 1; a <= n && !smaller; ++a)
      for (int b = a + 1; b <= n && !smaller; ++b)
        for (int c = b + 1; c <= n && !smaller; ++c) {
          if (std::vector<int>{a, b, c} >= *occ) continue;
          smaller = oracle::occurs({e[static_cast<std::size_t>(a - 1)], e[static_cast<std::size_t>(b - 1)],
                                    e[static_cast<std::size_t>(c - 1)]},
                                   letters(p));
        }
    CHECK_FALSE(smaller);
  }
}

TEST_CASE("patterns: containment is hereditary") {
  // if w avoids P then every subsequence avoids P
  const auto p = Pattern::parse("231");
  for (const auto& w : oracle::all_perms(6)) {
    if (!avoids_all(w, std::span<const Pattern>(&p, 1))) continue;
    for (std::size_t drop = 0; drop < w.size(); ++drop) {
      auto v = w;
      v.erase(v.begin() + static_cast<long>(drop));
      CHECK_FALSE(occurs(v, p));
    }
  }
}

TEST_CASE("patterns: perm pattern equals its word form on permutations") {
  const auto perm = Pattern::parse("3124");
  const auto word = Pattern::parse("2013");
  for (const auto& w : oracle::all_perms(6)) CHECK(occurs(w, perm) == occurs(w, word));
}

TEST_CASE("patterns: occurrences ending at the last entry") {
  const auto ps = Pattern::parse_list("0021,021");
  for (const auto& e : oracle::all_inversion_sequences(6)) {
    std::vector<int> head(e.begin(), e.end() - 1);
    for (const auto& p : ps) {
      if (occurs(head, p)) continue;
      CHECK(occurs_ending_at_last(e, p) == occurs(e, p));
    }
    bool any = false;
    for (const auto& p : ps) any = any || (!occurs(head, p) && occurs(e, p));
    bool head_clean = true;
    for (const auto& p : ps) head_clean = head_clean && !occurs(head, p);
    if (head_clean) CHECK(any_occurs_ending_at_last(e, ps) == any);
  }
}
