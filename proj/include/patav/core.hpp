#pragma once

#include "patav/dist_poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace patav {

/// Raised for malformed domain objects and violated operation preconditions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of [n] in one-line notation. Values and positions are
/// 1-based throughout.
class Permutation {
 public:
  /// Throws DomainError unless `word` is a rearrangement of 1..n, n >= 1.
  explicit Permutation(std::vector<int> word);
  /// Parses "231" (single digits) or "10,6,11,1" (comma separated).
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  /// 1-based access: at(i) = pi_i.
  int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  /// Position of value v (1-based).
  int position_of(int v) const;

  /// Digit string when n <= 9, otherwise comma separated.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Upper bound marker for positions of a ShapedSequence with no bound.
inline constexpr int kUnbounded = -1;

/// A sequence of nonnegative integers constrained positionwise by a shape:
/// 0 <= e_i < s_i, or just 0 <= e_i where s_i is kUnbounded.
class ShapedSequence {
 public:
  ShapedSequence(std::vector<int> entries, std::vector<int> shape);

  /// Shape (1, 2, ..., n): an ordinary inversion sequence.
  static ShapedSequence inversion(std::vector<int> entries);
  /// Shape (p, p+2, p+3, ..., p+n).
  static ShapedSequence shifted_inversion(std::vector<int> entries, int p);
  /// All positions unbounded.
  static ShapedSequence word(std::vector<int> entries);

  static std::vector<int> inversion_shape(int n);
  static std::vector<int> shifted_shape(int n, int p);

  int size() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  std::span<const int> shape() const { return shape_; }
  bool is_standard() const;
  bool all_bounded() const;

  friend bool operator==(const ShapedSequence&, const ShapedSequence&) = default;

 private:
  std::vector<int> entries_;
  std::vector<int> shape_;
};

enum class Side : char { L = 'L', R = 'R' };

/// Records, for each value 2..n of a permutation, whether it sits left or
/// right of the value 1.
class LRWord {
 public:
  explicit LRWord(std::vector<Side> letters) : letters_(std::move(letters)) {}
  static LRWord parse(std::string_view text);

  std::span<const Side> letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  std::string to_string() const;
  /// Number of maximal runs of equal letters.
  int runs() const;
  bool contains_subword(std::string_view pattern) const;

  friend bool operator==(const LRWord&, const LRWord&) = default;

 private:
  std::vector<Side> letters_;
};

/// Value of a statistic: a scalar, or a sorted set of positions (LMI).
using PositionSet = std::vector<int>;
using StatValue = std::variant<std::int64_t, PositionSet>;

std::string to_string(const StatValue& v);

Permutation inverse(const Permutation& p);

struct AscDes {
  int asc = 0;
  int des = 0;
};
/// Throws DomainError on empty input.
AscDes asc_des(std::span<const int> w);

int ides(const Permutation& p);
int iasc(const Permutation& p);
int exc(const Permutation& p);
int inversions(const Permutation& p);
int dist(std::span<const int> e);
int dist(const ShapedSequence& e);
/// Initial ascending run; requires the standard shape (1, 2, ..., n).
int iar(const ShapedSequence& e);
/// Tight entries (e_i = s_i - 1); requires every bound finite.
int tig(const ShapedSequence& e);

struct Extremes {
  int lar = 0;
  int sma = 0;
  int r_lar = 0;  // rightmost position of the maximum, 1-based
  int r_sma = 0;  // rightmost position of the minimum, 1-based
  bool is_sl() const { return r_lar >= r_sma; }
  bool is_ls() const { return r_lar < r_sma; }
};
Extremes lar_sma(std::span<const int> w);

int rma(const Permutation& p);
PositionSet lmi(const Permutation& p);

/// Throws DomainError for n = 1.
LRWord lr_word(const Permutation& p);
/// 0 for n = 1, otherwise the number of runs of lr_word(p).
int alt(const Permutation& p);
/// Length of the longest subword with no two equal adjacent letters,
/// by exhaustive search. Exponential; meant for cross-checking.
int longest_alternating_subword_bruteforce(const LRWord& w);

/// Eulerian polynomial E_n(t) from the alternating-sum formula.
DistPoly eulerian(int n);

}  // namespace patav
