#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patav {

class PatternParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PatternKind { Perm, Word };

/// A classical pattern (letters are 1..k, all distinct) or a word pattern
/// (letters normalized to exactly {0..m}, repeats allowed).
///
/// Matching is equality aware: equal pattern letters demand equal entries,
/// distinct letters demand the same strict order.
class Pattern {
 public:
  Pattern(std::vector<int> letters, PatternKind kind);

  /// "42153" parses as Perm, "0021" as Word (inferred from a '0').
  /// An explicit kind overrides the inference: "12" as Word means the
  /// word pattern 01.
  static Pattern parse(std::string_view text, std::optional<PatternKind> kind = std::nullopt);
  /// Comma separated list, e.g. "3124,42153,24153".
  static std::vector<Pattern> parse_list(std::string_view text, std::optional<PatternKind> kind = std::nullopt);

  std::span<const int> letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  PatternKind kind() const { return kind_; }
  /// Perm patterns render 1-based, Word patterns 0-based.
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> letters_;
  PatternKind kind_;
};

/// Lexicographically smallest 1-based position tuple witnessing P in w.
std::optional<std::vector<int>> first_occurrence(std::span<const int> w, const Pattern& p);
bool occurs(std::span<const int> w, const Pattern& p);
bool avoids_all(std::span<const int> w, std::span<const Pattern> ps);

/// True iff some occurrence of P in w uses the last entry of w. Used for
/// incremental pruning: a prefix that avoided P before its last entry was
/// appended contains P iff this holds.
bool occurs_ending_at_last(std::span<const int> w, const Pattern& p);
bool any_occurs_ending_at_last(std::span<const int> w, std::span<const Pattern> ps);

}  // namespace patav
