#include "patav/solvers.hpp"

namespace patav {

namespace {

// Fixed-point iteration; every update raises the x-valuation of the error
// by at least one, so order_x + 1 rounds reach the fixed point.
template <typename Update>
MultiSeries iterate_to_fixed_point(MultiSeries cur, int order_x, Update update) {
  for (int round = 0; round <= order_x + 1; ++round) {
    MultiSeries next = update(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw SeriesError("fixed-point iteration did not stabilize");
}

DistPoly t_poly(std::initializer_list<long long> c) { return DistPoly(c); }

}  // namespace

MultiSeries x_series(int order_x, std::optional<int> t_order) { return MultiSeries({Var::X}, {order_x}, t_order); }

MultiSeries xu_series(int order_x, int order_u, std::optional<int> t_order) {
  return MultiSeries({Var::X, Var::U}, {order_x, order_u}, t_order);
}

MultiSeries a_update(const MultiSeries& a) {
  const MultiSeries one = MultiSeries::one(a);
  const MultiSeries x = MultiSeries::variable(a, Var::X);
  const MultiSeries a2 = a * a;
  // x + t A^2 - x t^2 A^2
  const MultiSeries inner = x + a2.scaled(t_poly({0, 1})) - (x * a2).scaled(t_poly({0, 0, 1}));
  return (one + a) * inner;
}

MultiSeries a_residual(const MultiSeries& a) { return a - a_update(a); }

MultiSeries solve_A(int order_x, std::optional<int> order_t) {
  if (order_x < 1) throw SeriesError("solve_A needs order_x >= 1");
  return iterate_to_fixed_point(x_series(order_x, order_t), order_x, a_update);
}

BigInt a_n_lagrange(int n) {
  if (n < 1) throw SeriesError("a(n) needs n >= 1");
  BigInt total = 0;
  for (int k = 0; k <= n - 1; ++k) {
    BigInt inner = 0;
    for (int j = 0; j <= k; ++j) inner += binomial(k + j, j) * binomial(j, k - j);
    total += binomial(n, k + 1) * inner;
  }
  if (total % n != 0) throw SeriesError("internal error: Lagrange sum for a(" + std::to_string(n) + ") is not divisible by n");
  return total / n;
}

MultiSeries r_update(const MultiSeries& r) {
  const MultiSeries x = MultiSeries::variable(r, Var::X);
  const MultiSeries one = MultiSeries::one(r);
  const MultiSeries r2 = r * r;
  // 2 + x + t - x t^2
  const MultiSeries c2 = MultiSeries::constant(r, t_poly({2, 1})) + x - x.scaled(t_poly({0, 0, 1}));
  const MultiSeries denom = one + x.scaled(t_poly({2}));
  return (x + c2 * r2 - r2 * r) * denom.invert_unit();
}

MultiSeries r_residual(const MultiSeries& r) {
  const MultiSeries x = MultiSeries::variable(r, Var::X);
  const MultiSeries one = MultiSeries::one(r);
  const MultiSeries r2 = r * r;
  const MultiSeries c2 = MultiSeries::constant(r, t_poly({2, 1})) + x - x.scaled(t_poly({0, 0, 1}));
  return r2 * r - c2 * r2 + (one + x.scaled(t_poly({2}))) * r - x;
}

MultiSeries solve_r(int order_x, std::optional<int> order_t) {
  if (order_x < 1) throw SeriesError("solve_r needs order_x >= 1");
  return iterate_to_fixed_point(x_series(order_x, order_t), order_x, r_update);
}

MultiSeries i_from_r(const MultiSeries& r) { return r * (MultiSeries::one(r) - r).invert_unit(); }

MultiSeries n_linear_coefficient(const MultiSeries& like) {
  const MultiSeries x = MultiSeries::variable(like, Var::X);
  const MultiSeries u = MultiSeries::variable(like, Var::U);
  const MultiSeries one = MultiSeries::one(like);
  return one - u - x.scaled(t_poly({2})) + (u * x).scaled(t_poly({1, -1})) + (x * x).scaled(t_poly({1, 1}));
}

MultiSeries n_update(const MultiSeries& n) {
  const MultiSeries x = MultiSeries::variable(n, Var::X);
  const MultiSeries one = MultiSeries::one(n);
  const MultiSeries x1x = x * (one - x);
  return (x1x + (x1x * n * n).scaled(t_poly({0, 1}))) * n_linear_coefficient(n).invert_unit();
}

MultiSeries n_residual(const MultiSeries& n) {
  const MultiSeries x = MultiSeries::variable(n, Var::X);
  const MultiSeries one = MultiSeries::one(n);
  const MultiSeries x1x = x * (one - x);
  return (x1x * n * n).scaled(t_poly({0, 1})) - n_linear_coefficient(n) * n + x1x;
}

MultiSeries solve_N(int order_x, int order_u, std::optional<int> order_t) {
  if (order_x < 1 || order_u < 0) throw SeriesError("solve_N needs order_x >= 1 and order_u >= 0");
  return iterate_to_fixed_point(xu_series(order_x, order_u, order_t), order_x, n_update);
}

MultiSeries n_discriminant(const MultiSeries& like) {
  const MultiSeries x = MultiSeries::variable(like, Var::X);
  const MultiSeries one = MultiSeries::one(like);
  const MultiSeries d = n_linear_coefficient(like);
  const MultiSeries x1x = x * (one - x);
  return d * d - (x1x * x1x).scaled(t_poly({0, 4}));
}

MultiSeries n_discriminant_from_root(const MultiSeries& n) {
  const MultiSeries x = MultiSeries::variable(n, Var::X);
  const MultiSeries one = MultiSeries::one(n);
  const MultiSeries lhs = (x * (one - x) * n).scaled(t_poly({0, 2})) - n_linear_coefficient(n);
  return lhs * lhs;
}

}  // namespace patav
