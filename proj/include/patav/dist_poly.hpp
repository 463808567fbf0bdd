#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace patav {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in t with exact integer coefficients; coeffs[k] is the
/// coefficient of t^k. Canonical form has no trailing zeros, so the zero
/// polynomial is the empty vector.
class DistPoly {
 public:
  DistPoly() = default;
  DistPoly(std::initializer_list<long long> coeffs);
  explicit DistPoly(std::vector<BigInt> coeffs);

  static DistPoly constant(BigInt c);
  /// c * t^k
  static DistPoly monomial(std::size_t k, BigInt c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t k) const;
  BigInt eval_at_one() const;
  BigInt total() const { return eval_at_one(); }

  /// Adds c to the coefficient of t^k.
  void add_to(std::size_t k, const BigInt& c);

  DistPoly& operator+=(const DistPoly& o);
  DistPoly& operator-=(const DistPoly& o);
  DistPoly& operator*=(const DistPoly& o);
  friend DistPoly operator+(DistPoly a, const DistPoly& b) { return a += b; }
  friend DistPoly operator-(DistPoly a, const DistPoly& b) { return a -= b; }
  friend DistPoly operator*(const DistPoly& a, const DistPoly& b);
  DistPoly operator-() const;
  friend bool operator==(const DistPoly&, const DistPoly&) = default;

  /// Multiplies by t^k.
  DistPoly shifted(std::size_t k) const;
  /// Drops every term of degree > max_degree.
  DistPoly truncated(int max_degree) const;
  /// Exact division by t; empty when the constant term is nonzero.
  std::optional<DistPoly> divided_by_t() const;
  bool all_nonnegative() const;

  /// "1 + 10t + 11t^2 + t^3"; "0" for the zero polynomial.
  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

BigInt binomial(long long n, long long k);
BigInt factorial(int n);

}  // namespace patav
