#include <doctest.h>

#include "patav/series.hpp"

#include <random>

using namespace patav;

namespace {

MultiSeries xu(int ox, int ou) { return MultiSeries({Var::X, Var::U}, {ox, ou}); }

MultiSeries random_xu(std::mt19937& rng, int ox, int ou, bool unit = false) {
  auto s = xu(ox, ou);
  for (int i = 0; i <= ox; ++i)
    for (int j = 0; j <= ou; ++j) {
      DistPoly c{static_cast<long long>(rng() % 7) - 3, static_cast<long long>(rng() % 5) - 2};
      s.set(std::vector<int>{i, j}, c);
    }
  if (unit) s.set(std::vector<int>{0, 0}, DistPoly{1});
  return s;
}

// Naive double convolution.
MultiSeries naive_mul(const MultiSeries& a, const MultiSeries& b) {
  const int ox = a.orders()[0], ou = a.orders()[1];
  auto r = xu(ox, ou);
  for (int i = 0; i <= ox; ++i)
    for (int j = 0; j <= ou; ++j) {
      DistPoly acc;
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l) acc += a.coeff({k, l}) * b.coeff({i - k, j - l});
      r.set(std::vector<int>{i, j}, acc);
    }
  return r;
}

}  // namespace

TEST_CASE("series: basic products") {
  MultiSeries x({Var::X}, {3});
  const auto v = MultiSeries::variable(x, Var::X);
  const auto sq = v * v;
  CHECK(sq.coeff({2}) == DistPoly{1});
  CHECK(sq.coeff({1}).is_zero());
  CHECK((sq * sq).is_zero());  // x^4 is beyond order 3
}

TEST_CASE("series: multiplication matches naive convolution; ring laws") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_xu(rng, 4, 3), b = random_xu(rng, 4, 3), c = random_xu(rng, 4, 3);
    CHECK(a * b == naive_mul(a, b));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == xu(4, 3));
    CHECK(a + (-a) == xu(4, 3));
  }
}

TEST_CASE("series: inverses") {
  MultiSeries s({Var::X}, {6});
  const auto x = MultiSeries::variable(s, Var::X);
  const auto geo = (MultiSeries::one(s) - x).invert_unit();
  for (int n = 0; n <= 6; ++n) CHECK(geo.coeff({n}) == DistPoly{1});
  const auto xt = x.scaled(DistPoly{0, 1});
  const auto g2 = (MultiSeries::one(s) - xt).invert_unit();
  for (int n = 0; n <= 6; ++n) CHECK(g2.coeff({n}) == DistPoly::monomial(static_cast<std::size_t>(n)));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_xu(rng, 4, 4, true);
    CHECK(a * a.invert_unit() == MultiSeries::one(a));
  }
  CHECK_THROWS_AS(x.invert_unit(), SeriesError);
}

TEST_CASE("series: substitution") {
  // s -> 1 on s*x
  MultiSeries xs({Var::X, Var::S}, {3, 3});
  xs.set_complete(Var::S);
  const auto sx = MultiSeries::term(xs, {1, 1}, DistPoly{1});
  const auto r = sx.substitute(Var::S, Monomial{.coeff = 1});
  CHECK(r.coeff({1, 0}) == DistPoly{1});
  CHECK(r.coeff({1, 1}).is_zero());

  // s -> 1 on a truncated variable is impossible
  MultiSeries tr({Var::X, Var::S}, {3, 3});
  CHECK_THROWS_AS(tr.substitute(Var::S, Monomial{.coeff = 1}), SeriesError);

  // u -> u s, against direct coefficient moves
  std::mt19937 rng(3);
  MultiSeries base({Var::X, Var::S, Var::U}, {3, 4, 2});
  for (std::size_t i = 0; i < base.cell_count(); ++i) {
    auto e = base.exponents_of(i);
    if (e[1] == 0) base.set(e, DistPoly{static_cast<long long>(rng() % 5), 1});
  }
  const auto sub = base.substitute(Var::U, Monomial{.coeff = 1, .s = 1, .u = 1});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const int s_exp = c;  // only s^0 terms in base, so s^c u^c
        if (s_exp <= sub.orders()[1] && c <= sub.orders()[2])
          CHECK(sub.coeff({a, s_exp, c}) == base.coeff({a, 0, c}));
        if (b != c && b <= sub.orders()[1] && c <= sub.orders()[2]) CHECK(sub.coeff({a, b, c}).is_zero());
      }
}

TEST_CASE("series: substitution commutes with + and *") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_xu(rng, 5, 3), b = random_xu(rng, 5, 3);
    const Monomial m{.coeff = 1, .x = 1, .t = 1};  // u -> x t
    const auto sa = a.substitute(Var::U, m), sb = b.substitute(Var::U, m);
    CHECK((a + b).substitute(Var::U, m) == sa + sb);
    CHECK((a * b).substitute(Var::U, m) == sa * sb);
  }
}

TEST_CASE("series: required orders are enforced") {
  MultiSeries s({Var::X, Var::U}, {4, 2});
  CHECK_THROWS_AS(s.substitute(Var::U, Monomial{.coeff = 1, .x = 1}, {4, 2}), SeriesError);
  MultiSeries o({Var::X}, {3});
  CHECK_THROWS(o + s);  // different variable tuples
}

TEST_CASE("series: helpers") {
  MultiSeries s({Var::X}, {3});
  s.set(std::vector<int>{1}, DistPoly{0, 2});
  const auto d = s.divided_by_t();
  REQUIRE(d.has_value());
  CHECK(d->coeff({1}) == DistPoly{2});
  s.set(std::vector<int>{2}, DistPoly{1});
  CHECK_FALSE(s.divided_by_t().has_value());
  CHECK(s.at_t_one().coeff({1}) == DistPoly{2});
  CHECK(describe_exponents({Var::X, Var::U}, std::vector<int>{1, 2}) == "x^1 u^2");
  MultiSeries t({Var::X}, {3});
  const auto diff = first_difference(s, t);
  REQUIRE(diff.has_value());
  CHECK(diff->exponents == std::vector<int>{1});
  CHECK_FALSE(first_difference(s, s).has_value());
}
