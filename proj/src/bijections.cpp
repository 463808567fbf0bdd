#include "patav/bijections.hpp"

#include "patav/patterns.hpp"
#include "patav/tables.hpp"

#include <algorithm>
#include <numeric>

namespace patav {

namespace {

bool in_set_I(const Permutation& p) {
  static const std::vector<Pattern> kI = pattern_set_I();
  return avoids_all(p.word(), kI);
}

bool starts_left(const Permutation& p) { return p.size() >= 2 && p.position_of(2) < p.position_of(1); }

void require_class(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

std::vector<int> standardize(std::span<const int> w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)]; });
  std::vector<int> out(w.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return out;
}

ShapedSequence theta(const Permutation& p) {
  std::vector<int> e(static_cast<std::size_t>(p.size()), 0);
  for (int i = 1; i <= p.size(); ++i)
    for (int j = 1; j < i; ++j)
      if (p.at(j) > p.at(i)) ++e[static_cast<std::size_t>(i - 1)];
  return ShapedSequence::inversion(std::move(e));
}

Permutation theta_inverse(const ShapedSequence& e) {
  if (!e.is_standard()) throw DomainError("theta_inverse needs an inversion sequence of shape (1,...,n)");
  // Track the relative order of the prefix: entry i has e_i larger
  // predecessors, so it ranks (i - e_i)-th among the first i entries.
  std::vector<int> ranks;  // ranks[j] = current rank of entry j within the prefix
  for (int i = 1; i <= e.size(); ++i) {
    const int r = i - e.entries()[static_cast<std::size_t>(i - 1)];
    for (int& x : ranks)
      if (x >= r) ++x;
    ranks.push_back(r);
  }
  return Permutation(std::move(ranks));
}

Permutation phi(const Permutation& sigma, const Permutation& mu, Validate v) {
  if (sigma.size() < 2 || !starts_left(sigma))
    throw DomainError("phi: sigma must have value 2 to the left of value 1");
  if (v == Validate::Yes) {
    require_class(in_set_I(sigma), "phi: sigma contains a pattern of I");
    require_class(in_set_I(mu), "phi: mu contains a pattern of I");
    const int k = alt(sigma);
    require_class(k >= 1 && k <= 3, "phi: alt(sigma) must be 1, 2 or 3");
  }
  const int l = mu.size();
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(sigma.size() + l));
  for (int x : sigma.word()) w.push_back(x > 1 ? x + l : x);
  for (int x : mu.word()) w.push_back(x + 1);
  Permutation pi(std::move(w));
  if (v == Validate::Yes) {
    require_class(in_set_I(pi), "phi: image contains a pattern of I");
    require_class(!starts_left(pi) && alt(pi) == alt(sigma) + 1, "phi: image is not in the expected R class");
  }
  return pi;
}

std::pair<Permutation, Permutation> phi_inverse(const Permutation& pi, Validate v) {
  const int n = pi.size();
  if (n < 3 || starts_left(pi)) throw DomainError("phi_inverse: value 2 must sit right of value 1 (n >= 3)");
  const int one_pos = pi.position_of(1);
  // mu occupies the last l positions with values 2..l+1, and value l+2
  // lies left of the 1.
  for (int l = 1; l <= n - 2; ++l) {
    const auto suffix = pi.word().subspan(static_cast<std::size_t>(n - l));
    const int lo = *std::min_element(suffix.begin(), suffix.end());
    const int hi = *std::max_element(suffix.begin(), suffix.end());
    if (lo != 2 || hi != l + 1) continue;
    if (pi.position_of(l + 2) > one_pos) continue;
    std::vector<int> s;
    for (int i = 1; i <= n - l; ++i) s.push_back(pi.at(i) > 1 ? pi.at(i) - l : 1);
    std::vector<int> m;
    for (int x : suffix) m.push_back(x - 1);
    Permutation sigma(std::move(s));
    Permutation mu(std::move(m));
    if (v == Validate::Yes) {
      require_class(in_set_I(pi), "phi_inverse: input contains a pattern of I");
    }
    return {std::move(sigma), std::move(mu)};
  }
  throw DomainError("phi_inverse: " + pi.to_string() + " has no (sigma, mu) decomposition");
}

Permutation hat_right(const Permutation& p) {
  std::vector<int> w{1};
  for (int x : p.word()) w.push_back(x + 1);
  return Permutation(std::move(w));
}

Permutation hat_left(const Permutation& p) {
  std::vector<int> w;
  for (int x : p.word()) w.push_back(x + 1);
  w.push_back(1);
  return Permutation(std::move(w));
}

Permutation unhat_right(const Permutation& p) {
  if (p.size() < 2 || p.at(1) != 1) throw DomainError("unhat_right: permutation must begin with 1");
  std::vector<int> w;
  for (int i = 2; i <= p.size(); ++i) w.push_back(p.at(i) - 1);
  return Permutation(std::move(w));
}

Permutation unhat_left(const Permutation& p) {
  if (p.size() < 2 || p.at(p.size()) != 1) throw DomainError("unhat_left: permutation must end with 1");
  std::vector<int> w;
  for (int i = 1; i < p.size(); ++i) w.push_back(p.at(i) - 1);
  return Permutation(std::move(w));
}

Permutation psi(const Permutation& sigma, const Permutation& mu, Validate v) {
  const int n = sigma.size();
  if (n < 2) throw PsiPreconditionError(PsiCondition::LengthAtLeastTwo, "psi condition (1) failed: |sigma| must be >= 2");
  const int last = sigma.at(n);
  if (last == 1) throw PsiPreconditionError(PsiCondition::LastNotOne, "psi condition (2) failed: sigma must not end with 1");
  if (last == n) throw PsiPreconditionError(PsiCondition::LastNotMax, "psi condition (3) failed: sigma must not end with n");
  if (v == Validate::Yes) {
    require_class(in_set_I(sigma), "psi: sigma contains a pattern of I");
    require_class(in_set_I(mu), "psi: mu contains a pattern of I");
  }
  const int l = mu.size();
  // tilde sigma = (sigma_1+1) ... (sigma_{n-1}+1) 1 (sigma_n+1); its last
  // entry, last+1, is replaced by mu + last, and larger entries move up by l-1.
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n + l));
  for (int i = 1; i < n; ++i) {
    const int x = sigma.at(i) + 1;
    w.push_back(x > last + 1 ? x + l - 1 : x);
  }
  w.push_back(1);
  for (int x : mu.word()) w.push_back(x + last);
  Permutation pi(std::move(w));
  if (v == Validate::Yes) {
    require_class(in_set_I(pi), "psi: image contains a pattern of I");
    require_class(starts_left(pi) && alt(pi) == 3, "psi: image is not in the L class with alt 3");
  }
  return pi;
}

std::pair<Permutation, Permutation> psi_inverse(const Permutation& pi, Validate v) {
  const int n = pi.size();
  const int one_pos = pi.position_of(1);
  if (n < 4 || one_pos == n || one_pos == 1) throw DomainError("psi_inverse: 1 must have entries on both sides (n >= 4)");
  if (v == Validate::Yes) {
    require_class(in_set_I(pi), "psi_inverse: input contains a pattern of I");
    require_class(starts_left(pi) && alt(pi) == 3, "psi_inverse: input is not in the L class with alt 3");
  }
  const auto right = pi.word().subspan(static_cast<std::size_t>(one_pos));
  std::vector<int> concentrated(pi.word().begin(), pi.word().begin() + one_pos);
  concentrated.push_back(*std::min_element(right.begin(), right.end()));
  const std::vector<int> tilde = standardize(concentrated);
  std::vector<int> s;
  for (std::size_t i = 0; i < tilde.size(); ++i)
    if (tilde[i] != 1) s.push_back(tilde[i] - 1);
  return {Permutation(std::move(s)), Permutation(standardize(right))};
}

ShapedSequence strip_iar(const ShapedSequence& e, int p, Validate v) {
  if (!e.is_standard()) throw DomainError("strip_iar needs an inversion sequence of shape (1,...,n)");
  if (p < 1 || p >= e.size()) throw DomainError("strip_iar needs 1 <= p < n");
  if (iar(e) != p) throw DomainError("strip_iar: iar is " + std::to_string(iar(e)) + ", not " + std::to_string(p));
  if (v == Validate::Yes) require_class(!occurs(e.entries(), Pattern::parse("0021")), "strip_iar: input contains 0021");
  std::vector<int> rest(e.entries().begin() + p, e.entries().end());
  ShapedSequence out = ShapedSequence::shifted_inversion(std::move(rest), p);
  if (v == Validate::Yes) require_class(!occurs(out.entries(), Pattern::parse("021")), "strip_iar: output contains 021");
  return out;
}

ShapedSequence unstrip_iar(const ShapedSequence& e_hat, int p, Validate v) {
  if (e_hat.shape().size() == 0 || std::vector<int>(e_hat.shape().begin(), e_hat.shape().end()) !=
                                       ShapedSequence::shifted_shape(e_hat.size(), p))
    throw DomainError("unstrip_iar needs a sequence of shape (p, p+2, ..., p+n)");
  std::vector<int> w(static_cast<std::size_t>(p));
  std::iota(w.begin(), w.end(), 0);
  w.insert(w.end(), e_hat.entries().begin(), e_hat.entries().end());
  ShapedSequence out = ShapedSequence::inversion(std::move(w));
  if (v == Validate::Yes) require_class(!occurs(out.entries(), Pattern::parse("0021")), "unstrip_iar: output contains 0021");
  return out;
}

}  // namespace patav
