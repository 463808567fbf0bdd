#include "patav/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace patav {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw DomainError("invalid character '" + std::string(1, c) + "' in permutation");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(start, end - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      throw DomainError("invalid entry '" + std::string(tok) + "' in permutation");
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) throw DomainError("permutation must have length >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_int_list(text)); }

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

int Permutation::position_of(int v) const {
  auto it = std::find(word_.begin(), word_.end(), v);
  if (it == word_.end()) throw DomainError("value out of range");
  return static_cast<int>(it - word_.begin()) + 1;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!digits && i > 0) os << ',';
    os << word_[i];
  }
  return os.str();
}

ShapedSequence::ShapedSequence(std::vector<int> entries, std::vector<int> shape)
    : entries_(std::move(entries)), shape_(std::move(shape)) {
  if (entries_.size() != shape_.size()) throw DomainError("entries and shape differ in length");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) throw DomainError("negative entry at position " + std::to_string(i + 1));
    if (shape_[i] != kUnbounded) {
      if (shape_[i] < 1) throw DomainError("shape bounds must be positive");
      if (entries_[i] >= shape_[i])
        throw DomainError("entry at position " + std::to_string(i + 1) + " exceeds its bound");
    }
  }
}

std::vector<int> ShapedSequence::inversion_shape(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  return s;
}

std::vector<int> ShapedSequence::shifted_shape(int n, int p) {
  if (p < 1) throw DomainError("p must be >= 1");
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) s[static_cast<std::size_t>(i - 1)] = (i == 1) ? p : p + i;
  return s;
}

ShapedSequence ShapedSequence::inversion(std::vector<int> entries) {
  auto shape = inversion_shape(static_cast<int>(entries.size()));
  return ShapedSequence(std::move(entries), std::move(shape));
}

ShapedSequence ShapedSequence::shifted_inversion(std::vector<int> entries, int p) {
  auto shape = shifted_shape(static_cast<int>(entries.size()), p);
  return ShapedSequence(std::move(entries), std::move(shape));
}

ShapedSequence ShapedSequence::word(std::vector<int> entries) {
  std::vector<int> shape(entries.size(), kUnbounded);
  return ShapedSequence(std::move(entries), std::move(shape));
}

bool ShapedSequence::is_standard() const { return shape_ == inversion_shape(size()); }

bool ShapedSequence::all_bounded() const {
  return std::none_of(shape_.begin(), shape_.end(), [](int s) { return s == kUnbounded; });
}

LRWord LRWord::parse(std::string_view text) {
  std::vector<Side> v;
  for (char c : text) {
    if (c == 'L')
      v.push_back(Side::L);
    else if (c == 'R')
      v.push_back(Side::R);
    else
      throw DomainError("invalid letter '" + std::string(1, c) + "' in L/R word");
  }
  return LRWord(std::move(v));
}

std::string LRWord::to_string() const {
  std::string s;
  for (Side c : letters_) s.push_back(static_cast<char>(c));
  return s;
}

int LRWord::runs() const {
  if (letters_.empty()) return 0;
  int r = 1;
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] != letters_[i - 1]) ++r;
  return r;
}

bool LRWord::contains_subword(std::string_view pattern) const {
  std::size_t j = 0;
  for (Side c : letters_) {
    if (j < pattern.size() && static_cast<char>(c) == pattern[j]) ++j;
  }
  return j == pattern.size();
}

std::string to_string(const StatValue& v) {
  if (const auto* s = std::get_if<std::int64_t>(&v)) return std::to_string(*s);
  const auto& set = std::get<PositionSet>(v);
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out + "}";
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(q));
}

AscDes asc_des(std::span<const int> w) {
  if (w.empty()) throw DomainError("asc/des of an empty sequence");
  AscDes r;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < w[i + 1]) ++r.asc;
    if (w[i] > w[i + 1]) ++r.des;
  }
  return r;
}

int ides(const Permutation& p) { return asc_des(inverse(p).word()).des; }
int iasc(const Permutation& p) { return asc_des(inverse(p).word()).asc; }

int exc(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p.at(i) > i) ++c;
  return c;
}

int inversions(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.at(i) > p.at(j)) ++c;
  return c;
}

int dist(std::span<const int> e) {
  std::vector<int> pos;
  for (int v : e)
    if (v > 0) pos.push_back(v);
  std::sort(pos.begin(), pos.end());
  return static_cast<int>(std::unique(pos.begin(), pos.end()) - pos.begin());
}

int dist(const ShapedSequence& e) { return dist(e.entries()); }

int iar(const ShapedSequence& e) {
  if (!e.is_standard()) throw DomainError("iar requires an inversion sequence of shape (1,2,...,n)");
  const auto w = e.entries();
  int p = 0;
  while (p < e.size() && w[static_cast<std::size_t>(p)] == p) ++p;
  return p;
}

int tig(const ShapedSequence& e) {
  if (!e.all_bounded()) throw DomainError("tig requires every position to be bounded");
  int c = 0;
  for (int i = 0; i < e.size(); ++i)
    if (e.entries()[static_cast<std::size_t>(i)] == e.shape()[static_cast<std::size_t>(i)] - 1) ++c;
  return c;
}

Extremes lar_sma(std::span<const int> w) {
  if (w.empty()) throw DomainError("lar/sma of an empty sequence");
  Extremes x{w[0], w[0], 1, 1};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    if (w[i] >= x.lar) {
      x.lar = w[i];
      x.r_lar = pos;
    }
    if (w[i] <= x.sma) {
      x.sma = w[i];
      x.r_sma = pos;
    }
  }
  return x;
}

int rma(const Permutation& p) {
  int c = 0;
  int best = 0;
  for (int i = p.size(); i >= 1; --i) {
    if (p.at(i) > best) {
      ++c;
      best = p.at(i);
    }
  }
  return c;
}

PositionSet lmi(const Permutation& p) {
  PositionSet s;
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.at(i) < best) {
      s.push_back(i);
      best = p.at(i);
    }
  }
  return s;
}

LRWord lr_word(const Permutation& p) {
  if (p.size() < 2) throw DomainError("the L/R word needs a permutation of length >= 2");
  const Permutation q = inverse(p);
  const int k = q.at(1);
  std::vector<Side> w;
  w.reserve(static_cast<std::size_t>(p.size() - 1));
  for (int v = 2; v <= p.size(); ++v) w.push_back(q.at(v) < k ? Side::L : Side::R);
  return LRWord(std::move(w));
}

int alt(const Permutation& p) { return p.size() == 1 ? 0 : lr_word(p).runs(); }

int longest_alternating_subword_bruteforce(const LRWord& w) {
  const auto letters = w.letters();
  const int n = w.size();
  if (n > 24) throw DomainError("word too long for exhaustive search");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int len = 0;
    bool ok = true;
    Side prev{};
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (len > 0 && letters[static_cast<std::size_t>(i)] == prev) ok = false;
      prev = letters[static_cast<std::size_t>(i)];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

DistPoly eulerian(int n) {
  if (n < 1) throw DomainError("eulerian(n) requires n >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    BigInt s = 0;
    for (int j = 0; j <= k + 1; ++j) {
      BigInt term = binomial(n + 1, j) * boost::multiprecision::pow(BigInt(k - j + 1), static_cast<unsigned>(n));
      if (j % 2) s -= term; else s += term;
    }
    c[static_cast<std::size_t>(k)] = s;
  }
  return DistPoly(std::move(c));
}

}  // namespace patav
