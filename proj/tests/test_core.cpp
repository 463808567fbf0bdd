#include <doctest.h>

#include "oracles.hpp"
#include "patav/core.hpp"

#include <random>

using namespace patav;

namespace {
std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_CASE("core: permutation parsing and validation") {
  CHECK(Permutation::parse("231").to_string() == "231");
  CHECK(Permutation::parse("10,6,11,1,8,7,9,4,2,5,3").size() == 11);
  CHECK(Permutation::parse("10,6,11,1,8,7,9,4,2,5,3").to_string() == "10,6,11,1,8,7,9,4,2,5,3");
  CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({2, 3}), DomainError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(Permutation::parse("2x1"), DomainError);
}

TEST_CASE("core: shaped sequences") {
  CHECK_NOTHROW(ShapedSequence::inversion({0, 1, 0}));
  CHECK_THROWS_AS(ShapedSequence::inversion({0, 2, 0}), DomainError);
  CHECK_THROWS_AS(ShapedSequence::inversion({0, -1}), DomainError);
  CHECK(ShapedSequence::shifted_shape(3, 2) == std::vector<int>{2, 4, 5});
  CHECK(ShapedSequence::inversion({0, 1}).is_standard());
  CHECK_FALSE(ShapedSequence::word({0, 4}).all_bounded());
}

TEST_CASE("core: worked statistic examples") {
  CHECK(inverse(Permutation::parse("231")) == Permutation::parse("312"));
  const std::vector<int> e{0, 0, 2, 1};
  CHECK(asc_des(e).asc == 1);
  CHECK(asc_des(e).des == 1);
  CHECK(exc(Permutation::parse("231")) == 2);
  CHECK(iar(ShapedSequence::inversion({0, 1, 0})) == 2);
  CHECK(iar(ShapedSequence::inversion({0, 0})) == 1);
  CHECK(tig(ShapedSequence({1, 3, 2}, {2, 4, 5})) == 2);
  CHECK(lar_sma(std::vector<int>{0, 1, 0}).is_ls());
  const auto pi = Permutation::parse("547912683");
  CHECK(rma(pi) == 3);
  CHECK(lmi(pi) == PositionSet{1, 2, 5});
  CHECK(lr_word(pi).to_string() == "RRLLRLRL");
  CHECK(alt(pi) == 6);
  CHECK_THROWS_AS(asc_des(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(lr_word(Permutation::identity(1)), DomainError);
  CHECK(alt(Permutation::identity(1)) == 0);
  CHECK_THROWS_AS(tig(ShapedSequence::word({0, 1})), DomainError);
}

TEST_CASE("core: exc of the reversal is floor(n/2)") {
  for (int n = 1; n <= 12; ++n) {
    std::vector<int> w;
    for (int i = n; i >= 1; --i) w.push_back(i);
    CHECK(exc(Permutation(w)) == n / 2);
  }
}

TEST_CASE("core: statistics agree with naive definitions on S_n") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : oracle::all_perms(n)) {
      const Permutation p(w);
      CHECK(vec(inverse(p).word()) == oracle::inverse(w));
      CHECK(asc_des(w).asc == oracle::asc(w));
      CHECK(asc_des(w).des == oracle::des(w));
      CHECK(asc_des(w).asc + asc_des(w).des == n - 1);
      CHECK(ides(p) == oracle::ides(w));
      CHECK(ides(p) + iasc(p) == n - 1);
      CHECK(exc(p) == oracle::exc(w));
      if (n >= 2) CHECK(lr_word(p).to_string() == oracle::lr(w));
    }
}

TEST_CASE("core: inversion count via theta-style sum") {
  for (const auto& w : oracle::all_perms(6)) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    CHECK(inversions(Permutation(w)) == inv);
  }
}

TEST_CASE("core: dist, lar, sma and SL/LS against definitions") {
  for (const auto& e : oracle::all_inversion_sequences(6)) {
    CHECK(dist(e) == oracle::dist(e));
    const auto ex = lar_sma(e);
    CHECK(ex.lar == *std::max_element(e.begin(), e.end()));
    CHECK(ex.sma == *std::min_element(e.begin(), e.end()));
    int rl = 0, rs = 0;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      if (e[static_cast<std::size_t>(i)] == ex.lar) rl = i + 1;
      if (e[static_cast<std::size_t>(i)] == ex.sma) rs = i + 1;
    }
    CHECK(ex.r_lar == rl);
    CHECK(ex.r_sma == rs);
    CHECK(ex.is_sl() != ex.is_ls());
    int staircase = 0;
    while (staircase < static_cast<int>(e.size()) && e[static_cast<std::size_t>(staircase)] == staircase) ++staircase;
    CHECK(iar(ShapedSequence::inversion(e)) == staircase);
  }
}

TEST_CASE("core: rma and lmi against definitions") {
  for (const auto& w : oracle::all_perms(6)) {
    const Permutation p(w);
    // right-to-left maxima
    int r = 0, mx = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      if (*it > mx) mx = *it, ++r;
    CHECK(rma(p) == r);
    // left-to-right minima positions
    PositionSet want;
    int mn = 1 << 30;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] < mn) mn = w[i], want.push_back(static_cast<int>(i) + 1);
    CHECK(lmi(p) == want);
  }
}

TEST_CASE("core: runs of an L/R word equal its longest alternating subword") {
  for (int len = 1; len <= 12; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string s;
      for (int i = 0; i < len; ++i) s += (bits >> i & 1) ? 'L' : 'R';
      const auto w = LRWord::parse(s);
      const int brute = oracle::longest_alternating(s);
      CHECK(w.runs() == brute);
      if (len <= 8) CHECK(longest_alternating_subword_bruteforce(w) == brute);
    }
}

TEST_CASE("core: L/R word subword search") {
  CHECK(LRWord::parse("RRLLRLRL").contains_subword("LRLR"));
  CHECK_FALSE(LRWord::parse("LLRR").contains_subword("LRL"));
  CHECK_THROWS_AS(LRWord::parse("LXR"), DomainError);
}

TEST_CASE("core: eulerian polynomials match descent counts") {
  CHECK(eulerian(3) == DistPoly{1, 4, 1});
  CHECK(eulerian(4) == DistPoly{1, 11, 11, 1});
  for (int n = 1; n <= 8; ++n) {
    const auto d = oracle::tally(oracle::all_perms(n), oracle::des);
    std::vector<BigInt> c(d.begin(), d.end());
    CHECK(eulerian(n) == DistPoly(c));
  }
}

TEST_CASE("core: stat value rendering") {
  CHECK(to_string(StatValue{std::int64_t{3}}) == "3");
  CHECK(to_string(StatValue{PositionSet{1, 2, 5}}).find('5') != std::string::npos);
}
