#pragma once

#include "patav/series.hpp"

#include <optional>

namespace patav {

/// Series in x alone with an optional t truncation.
MultiSeries x_series(int order_x, std::optional<int> t_order = std::nullopt);
/// Series in (x, u).
MultiSeries xu_series(int order_x, int order_u, std::optional<int> t_order = std::nullopt);

/// A(x,t): fixed point of A -> (1 + A)(x + t A^2 - x t^2 A^2) started at 0.
MultiSeries solve_A(int order_x, std::optional<int> order_t = std::nullopt);
MultiSeries a_update(const MultiSeries& a);
/// A - (1 + A)(x + t A^2 - x t^2 A^2); zero for the true solution.
MultiSeries a_residual(const MultiSeries& a);

/// a(n) from the Lagrange-inversion double sum. Throws SeriesError if the
/// final division by n is inexact.
BigInt a_n_lagrange(int n);

/// r(x,t): root of r^3 - (2 + x + t - x t^2) r^2 + (1 + 2x) r - x = 0 with
/// r = x + O(x^2), via r -> (x + (2 + x + t - x t^2) r^2 - r^3) / (1 + 2x).
MultiSeries solve_r(int order_x, std::optional<int> order_t = std::nullopt);
MultiSeries r_update(const MultiSeries& r);
MultiSeries r_residual(const MultiSeries& r);
/// r / (1 - r).
MultiSeries i_from_r(const MultiSeries& r);

/// N(x,u,t) of 021-avoiding words weighted by u^lar t^asc: the root of
///   t x (1-x) N^2 - D N + x (1-x) = 0,  D = 1 - u - (ut - u + 2) x + (t+1) x^2
/// with N(x,0,t) = x/(1-x), via N -> (x(1-x) + t x (1-x) N^2) / D.
MultiSeries solve_N(int order_x, int order_u, std::optional<int> order_t = std::nullopt);
MultiSeries n_update(const MultiSeries& n);
MultiSeries n_residual(const MultiSeries& n);
/// The polynomial D = 1 - u - 2x + ux(1-t) + x^2(1+t), shaped like `like`.
MultiSeries n_linear_coefficient(const MultiSeries& like);
/// Delta = D^2 - 4 (1-x)^2 x^2 t.
MultiSeries n_discriminant(const MultiSeries& like);
/// (2 x (1-x) t N - D)^2, which equals Delta for the admissible root.
MultiSeries n_discriminant_from_root(const MultiSeries& n);

}  // namespace patav
