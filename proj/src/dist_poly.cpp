#include "patav/dist_poly.hpp"

#include <algorithm>
#include <sstream>

namespace patav {

DistPoly::DistPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

DistPoly::DistPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

DistPoly DistPoly::constant(BigInt c) { return DistPoly(std::vector<BigInt>{std::move(c)}); }

DistPoly DistPoly::monomial(std::size_t k, BigInt c) {
  std::vector<BigInt> v(k + 1);
  v[k] = std::move(c);
  return DistPoly(std::move(v));
}

void DistPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt DistPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

BigInt DistPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void DistPoly::add_to(std::size_t k, const BigInt& c) {
  if (c == 0) return;
  if (coeffs_.size() <= k) coeffs_.resize(k + 1);
  coeffs_[k] += c;
  normalize();
}

DistPoly& DistPoly::operator+=(const DistPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

DistPoly& DistPoly::operator-=(const DistPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

DistPoly operator*(const DistPoly& a, const DistPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DistPoly(std::move(out));
}

DistPoly& DistPoly::operator*=(const DistPoly& o) { return *this = *this * o; }

DistPoly DistPoly::operator-() const {
  DistPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

DistPoly DistPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, BigInt(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return DistPoly(std::move(v));
}

DistPoly DistPoly::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  if (degree() <= max_degree) return *this;
  return DistPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

std::optional<DistPoly> DistPoly::divided_by_t() const {
  if (is_zero()) return DistPoly{};
  if (coeffs_.front() != 0) return std::nullopt;
  return DistPoly(std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
}

bool DistPoly::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

std::string DistPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    BigInt c = coeffs_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace patav
