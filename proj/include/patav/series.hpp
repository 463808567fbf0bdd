#pragma once

#include "patav/dist_poly.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace patav {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series variables. t is not among them: it lives in the coefficient ring.
enum class Var { X, S, U };

char to_char(Var v);

/// c * x^x * s^s * u^u * t^t, used as the right-hand side of a substitution.
struct Monomial {
  BigInt coeff = 1;
  int x = 0;
  int s = 0;
  int u = 0;
  int t = 0;

  int exponent(Var v) const;
};

/// Truncated power series in an ordered tuple of variables drawn from
/// {x, s, u}, with coefficients in Z[t].
///
/// orders[i] is the largest exponent kept for vars[i]. A variable flagged
/// complete has no nonzero terms beyond its order (the series is a
/// polynomial in it), which is what allows setting it to 1. The optional
/// t_order truncates coefficient polynomials.
class MultiSeries {
 public:
  MultiSeries(std::vector<Var> vars, std::vector<int> orders, std::optional<int> t_order = std::nullopt);

  static MultiSeries constant(const MultiSeries& shape_like, DistPoly c);
  static MultiSeries one(const MultiSeries& shape_like) { return constant(shape_like, DistPoly{1}); }
  /// The series consisting of the single term c * prod vars^exps.
  static MultiSeries term(const MultiSeries& shape_like, std::vector<int> exps, DistPoly c);
  /// The variable v itself, i.e. term with exponent 1 in v.
  static MultiSeries variable(const MultiSeries& shape_like, Var v);

  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<int>& orders() const { return orders_; }
  std::optional<int> t_order() const { return t_order_; }
  int order(Var v) const;
  bool has_var(Var v) const { return index_of(v) >= 0; }
  bool complete(Var v) const;
  void set_complete(Var v, bool flag = true);

  /// Coefficient at the exponent tuple; zero when out of range.
  const DistPoly& coeff(std::span<const int> exps) const;
  DistPoly coeff(std::initializer_list<int> exps) const { return coeff(std::span<const int>(exps.begin(), exps.size())); }
  void set(std::span<const int> exps, DistPoly c);
  void add_to(std::span<const int> exps, const DistPoly& c);
  bool in_range(std::span<const int> exps) const;

  std::size_t cell_count() const { return cells_.size(); }
  std::vector<int> exponents_of(std::size_t cell) const;
  const DistPoly& cell(std::size_t i) const { return cells_[i]; }
  /// Visits nonzero coefficients in row-major (lexicographic) order.
  void for_each_nonzero(const std::function<void(const std::vector<int>&, const DistPoly&)>& fn) const;
  bool is_zero() const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  MultiSeries operator-() const;
  MultiSeries scaled(const DistPoly& c) const;

  /// Multiplicative inverse; the constant term must be the constant +1 or -1.
  MultiSeries invert_unit() const;

  /// Replaces v by the monomial. Result orders are the tightest ones the
  /// source truncation supports; throws SeriesError when nothing can be
  /// determined (e.g. v -> 1 on a truncated variable).
  MultiSeries substitute(Var v, const Monomial& replacement) const;
  /// As above, but throws SeriesError naming the needed source order when
  /// the result cannot reach `required` orders (same variable tuple).
  MultiSeries substitute(Var v, const Monomial& replacement, const std::vector<int>& required) const;

  /// Re-expresses the series over a superset of its variables; new
  /// variables appear with exponent 0 only and are flagged complete.
  MultiSeries embed(const std::vector<Var>& vars, const std::vector<int>& orders) const;
  /// Drops the listed variables, which must only carry exponent 0.
  MultiSeries project_out(Var v) const;
  MultiSeries truncated(const std::vector<int>& orders, std::optional<int> t_order = std::nullopt) const;

  /// Exact division by t; empty if any coefficient has a nonzero constant.
  std::optional<MultiSeries> divided_by_t() const;
  /// Sets t = 1 in every coefficient.
  MultiSeries at_t_one() const;

  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

 private:
  int index_of(Var v) const;
  std::size_t offset(std::span<const int> exps) const;
  void check_compatible(const MultiSeries& o) const;
  static std::vector<int> min_orders(const MultiSeries& a, const MultiSeries& b);
  static std::optional<int> min_t(std::optional<int> a, std::optional<int> b);
  MultiSeries reshaped(const std::vector<int>& orders, std::optional<int> t_order) const;
  MultiSeries substitute_impl(Var v, const Monomial& rep, const std::vector<int>& result_orders,
                              std::optional<int> result_t) const;
  void clip_t(DistPoly& p) const;

  std::vector<Var> vars_;
  std::vector<int> orders_;
  std::vector<bool> complete_;
  std::optional<int> t_order_;
  std::vector<std::size_t> strides_;
  std::vector<DistPoly> cells_;
};

/// First coefficient (lexicographic in exponents) where a and b differ,
/// compared over the componentwise-minimum truncation.
struct SeriesDifference {
  std::vector<int> exponents;
  DistPoly lhs;
  DistPoly rhs;
  std::string describe(const std::vector<Var>& vars) const;
};
/// "x^2 u^1" for the given exponent tuple.
std::string describe_exponents(const std::vector<Var>& vars, std::span<const int> exps);

std::optional<SeriesDifference> first_difference(const MultiSeries& a, const MultiSeries& b);

}  // namespace patav
