#include <doctest.h>

#include "oracles.hpp"
#include "patav/enumerate.hpp"
#include "patav/solvers.hpp"
#include "patav/tables.hpp"

using namespace patav;

TEST_CASE("solvers: A(x,t)") {
  const auto A = solve_A(10);
  CHECK(A.coeff({1}) == DistPoly{1});
  CHECK(A.coeff({2}) == DistPoly{1, 1});
  CHECK(A.coeff({3}) == DistPoly{1, 4, 1});
  CHECK(A.coeff({4}) == DistPoly{1, 10, 11, 1});
  CHECK(a_residual(A).is_zero());
  CHECK(a_update(A) == A);
  const std::vector<long long> a{1, 2, 6, 23, 101, 480};
  for (int n = 1; n <= 6; ++n) CHECK(a_n_lagrange(n) == a[static_cast<std::size_t>(n - 1)]);
  for (int n = 1; n <= 10; ++n) CHECK(a_n_lagrange(n) == A.coeff({n}).eval_at_one());
  // enumeration oracle
  for (int n = 1; n <= 7; ++n) {
    const auto want = oracle::filter(oracle::all_inversion_sequences(n), {{0, 0, 2, 1}}).size();
    CHECK(a_n_lagrange(n) == want);
  }
}

TEST_CASE("solvers: r(x,t)") {
  const auto r = solve_r(10);
  CHECK(r.coeff({1}) == DistPoly{1});
  CHECK(r.coeff({2}) == DistPoly{0, 1});
  CHECK(r.coeff({3}) == DistPoly{0, 2, 1});
  CHECK(r.coeff({4}) == DistPoly{0, 3, 8, 1});
  CHECK(r.coeff({5}) == DistPoly{0, 4, 27, 22, 1});
  CHECK(r_residual(r).is_zero());
  CHECK(r_update(r) == r);
  CHECK(i_from_r(r) == solve_A(10));
}

TEST_CASE("solvers: N(x,u,t)") {
  const auto N = solve_N(8, 6);
  for (int n = 1; n <= 8; ++n) CHECK(N.coeff({n, 0}) == DistPoly{1});
  CHECK(N.coeff({0, 0}).is_zero());
  CHECK(n_residual(N).is_zero());
  CHECK(n_update(N) == N);
  CHECK(n_discriminant_from_root(N) == n_discriminant(N));
  const auto tab = trivariate_N_table(5, 5);
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l <= 5; ++l) CHECK(N.coeff({n, l}) == tab.all.coeff({n, l}));
}

TEST_CASE("solvers: t truncation") {
  const auto A = solve_A(6, 2);
  CHECK(A.coeff({4}) == DistPoly{1, 10, 11});
}
