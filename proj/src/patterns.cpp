#include "patav/patterns.hpp"

#include <algorithm>
#include <set>

namespace patav {

namespace {

inline int sign(int a, int b) { return (a > b) - (a < b); }

// Backtracking matcher. Pattern letter j is assigned to a position pos[j];
// a candidate position is accepted when its entry compares with every
// already-assigned entry exactly as the pattern letters compare.
class Matcher {
 public:
  Matcher(std::span<const int> w, const Pattern& p) : w_(w), p_(p.letters()), pos_(p_.size(), -1) {}

  // Searches with pattern letters 0..k-1 in order, each after the previous.
  bool search_from(std::size_t j, int min_pos, int max_pos) {
    const std::size_t k = p_.size();
    if (j == k) return true;
    // leave room for the remaining letters
    const int last_start = max_pos - static_cast<int>(k - j - 1);
    for (int i = min_pos; i <= last_start; ++i) {
      if (!consistent(j, i)) continue;
      pos_[j] = i;
      if (search_from(j + 1, i + 1, max_pos)) return true;
      pos_[j] = -1;
    }
    return false;
  }

  // Pins the last pattern letter on the last entry of w, then fills the rest.
  bool search_anchored() {
    const std::size_t k = p_.size();
    const int n = static_cast<int>(w_.size());
    if (static_cast<int>(k) > n) return false;
    pos_[k - 1] = n - 1;
    return search_from_anchored(0, 0, n - 2);
  }

  std::vector<int> positions_1based() const {
    std::vector<int> out;
    for (int p : pos_) out.push_back(p + 1);
    return out;
  }

 private:
  bool search_from_anchored(std::size_t j, int min_pos, int max_pos) {
    const std::size_t k = p_.size();
    if (j == k - 1) return true;
    const int last_start = max_pos - static_cast<int>(k - 2 - j);
    for (int i = min_pos; i <= last_start; ++i) {
      if (!consistent(j, i)) continue;
      pos_[j] = i;
      if (search_from_anchored(j + 1, i + 1, max_pos)) return true;
      pos_[j] = -1;
    }
    return false;
  }

  bool consistent(std::size_t j, int i) const {
    const int v = w_[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < p_.size(); ++a) {
      if (a == j || pos_[a] < 0) continue;
      if (sign(v, w_[static_cast<std::size_t>(pos_[a])]) != sign(p_[j], p_[a])) return false;
    }
    return true;
  }

  std::span<const int> w_;
  std::span<const int> p_;
  std::vector<int> pos_;
};

}  // namespace

Pattern::Pattern(std::vector<int> letters, PatternKind kind) : letters_(std::move(letters)), kind_(kind) {
  const int k = size();
  if (k < 1 || k > 9) throw PatternParseError("pattern length must be between 1 and 9");
  if (kind_ == PatternKind::Perm) {
    std::vector<int> sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i + 1)
        throw PatternParseError("permutation pattern must use each of 1.." + std::to_string(k) + " once");
  } else {
    std::set<int> distinct(letters_.begin(), letters_.end());
    int expect = 0;
    for (int v : distinct)
      if (v != expect++) throw PatternParseError("word pattern letters must be exactly 0..m");
  }
}

Pattern Pattern::parse(std::string_view text, std::optional<PatternKind> kind) {
  if (text.empty()) throw PatternParseError("empty pattern");
  if (text.size() > 9) throw PatternParseError("pattern '" + std::string(text) + "' is longer than 9 letters");
  std::vector<int> letters;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw PatternParseError("invalid character '" + std::string(1, c) + "' in pattern '" + std::string(text) + "'");
    letters.push_back(c - '0');
  }
  const bool has_zero = std::find(letters.begin(), letters.end(), 0) != letters.end();
  const PatternKind k = kind.value_or(has_zero ? PatternKind::Word : PatternKind::Perm);
  if (k == PatternKind::Word) {
    // standardize to 0..m, keeping ties
    std::vector<int> distinct = letters;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& v : letters)
      v = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin());
  } else if (has_zero) {
    throw PatternParseError("invalid character '0' in permutation pattern '" + std::string(text) + "'");
  }
  try {
    return Pattern(std::move(letters), k);
  } catch (const PatternParseError& e) {
    throw PatternParseError(std::string(e.what()) + " (in '" + std::string(text) + "')");
  }
}

std::vector<Pattern> Pattern::parse_list(std::string_view text, std::optional<PatternKind> kind) {
  std::vector<Pattern> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(',', start);
    auto tok = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(parse(tok, kind));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string Pattern::to_string() const {
  std::string s;
  for (int v : letters_) s.push_back(static_cast<char>('0' + v));
  return s;
}

std::optional<std::vector<int>> first_occurrence(std::span<const int> w, const Pattern& p) {
  if (p.size() > static_cast<int>(w.size())) return std::nullopt;
  Matcher m(w, p);
  if (!m.search_from(0, 0, static_cast<int>(w.size()) - 1)) return std::nullopt;
  return m.positions_1based();
}

bool occurs(std::span<const int> w, const Pattern& p) { return first_occurrence(w, p).has_value(); }

bool avoids_all(std::span<const int> w, std::span<const Pattern> ps) {
  return std::none_of(ps.begin(), ps.end(), [&](const Pattern& p) { return occurs(w, p); });
}

bool occurs_ending_at_last(std::span<const int> w, const Pattern& p) {
  if (w.empty()) return false;
  Matcher m(w, p);
  return m.search_anchored();
}

bool any_occurs_ending_at_last(std::span<const int> w, std::span<const Pattern> ps) {
  return std::any_of(ps.begin(), ps.end(), [&](const Pattern& p) { return occurs_ending_at_last(w, p); });
}

}  // namespace patav
