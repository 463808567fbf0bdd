#pragma once

#include "patav/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace patav {

/// Whether a bijection also checks pattern-class membership of its inputs
/// and outputs (the expensive part). Structural preconditions are always
/// checked.
enum class Validate { No, Yes };

#ifdef NDEBUG
inline constexpr Validate kDefaultValidate = Validate::No;
#else
inline constexpr Validate kDefaultValidate = Validate::Yes;
#endif

/// e_i = |{j < i : pi_j > pi_i}|.
ShapedSequence theta(const Permutation& p);
/// Decodes a standard inversion sequence back to its permutation.
Permutation theta_inverse(const ShapedSequence& e);

/// Concatenates sigma and mu, raising sigma's entries above 1 by |mu| and
/// mu's entries by 1. sigma must have value 2 left of value 1.
Permutation phi(const Permutation& sigma, const Permutation& mu, Validate v = kDefaultValidate);
/// Splits pi (value 2 right of value 1, n >= 3) back into (sigma, mu).
std::pair<Permutation, Permutation> phi_inverse(const Permutation& pi, Validate v = kDefaultValidate);

/// 1 (pi_1 + 1) ... (pi_n + 1)
Permutation hat_right(const Permutation& p);
/// (pi_1 + 1) ... (pi_n + 1) 1
Permutation hat_left(const Permutation& p);
/// Inverse of hat_right; requires pi_1 = 1 and n >= 2.
Permutation unhat_right(const Permutation& p);
/// Inverse of hat_left; requires pi_n = 1 and n >= 2.
Permutation unhat_left(const Permutation& p);

/// Which psi precondition a pair violates.
enum class PsiCondition { LengthAtLeastTwo, LastNotOne, LastNotMax };

class PsiPreconditionError : public DomainError {
 public:
  PsiPreconditionError(PsiCondition c, const std::string& msg) : DomainError(msg), condition(c) {}
  PsiCondition condition;
};

/// Inserts 1 at the penultimate position of sigma + 1, then inflates the
/// last entry into a copy of mu. Requires n >= 2 and 1 < sigma_n < n.
Permutation psi(const Permutation& sigma, const Permutation& mu, Validate v = kDefaultValidate);
/// Concentrates everything right of 1 back into a single entry.
std::pair<Permutation, Permutation> psi_inverse(const Permutation& pi, Validate v = kDefaultValidate);

/// Drops the staircase prefix 0, 1, ..., p-1 of an inversion sequence with
/// iar = p, giving a member of I_{n,p}.
ShapedSequence strip_iar(const ShapedSequence& e, int p, Validate v = kDefaultValidate);
/// Prepends 0, 1, ..., p-1 to a member of I_{n,p}.
ShapedSequence unstrip_iar(const ShapedSequence& e_hat, int p, Validate v = kDefaultValidate);

/// Replaces every value by its rank (1-based) within the word.
std::vector<int> standardize(std::span<const int> w);

/// Outcome of an exhaustive bijection test.
struct BijectionReport {
  std::string name;
  std::string size_range;
  bool bijective = false;
  std::vector<std::string> identities_verified;
  std::string failure;  // empty unless something failed
};

}  // namespace patav
