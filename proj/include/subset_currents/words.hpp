#pragma once

// Reduced words over the signed alphabet {±1, ..., ±N} of a free basis of F_N.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subset_currents {

/// A signed basis letter: i > 0 is the i-th basis element, -i its inverse.
using Letter = int;

inline constexpr int kMaxRank = 32;
inline constexpr int kMaxCompactRank = 26;

inline bool valid_letter(Letter x, int rank) {
  return x != 0 && x >= -rank && x <= rank;
}

/// Position of a letter in the fixed order a < A < b < B < ... used for every
/// deterministic tie-break (shortlex words, canonical forms, arc labels).
inline int letter_index(Letter x) {
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}

inline Letter letter_at(int index) {
  return index % 2 == 0 ? index / 2 + 1 : -(index / 2 + 1);
}

/// All 2N letters of A^{±1} in letter order.
std::vector<Letter> alphabet(int rank);

void check_rank(int rank);

/// Freely reduced word; the value type of group elements of F_N.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);
  /// Free reduction of an arbitrary letter sequence.
  Word(std::span<const Letter> letters, int rank);
  Word(std::initializer_list<Letter> letters, int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  /// Product in F_N, freely reduced.
  Word operator*(const Word& other) const;
  /// Appends one letter, cancelling against the last letter if needed.
  Word times(Letter x) const;
  Word pow(int k) const;

  bool is_cyclically_reduced() const {
    return letters_.size() < 2 || letters_.front() != -letters_.back();
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  int rank_ = 0;
};

/// Shortlex order under letter_index.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

Word reduce(std::span<const Letter> letters, int rank);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

struct PrimitiveRoot {
  Word root;
  int exponent = 1;
};

/// Root of the cyclic reduction of w; throws std::invalid_argument on the
/// trivial word.
PrimitiveRoot primitive_root(const Word& w);

/// Compact text: 'a'..'z' for basis letters, upper case for inverses.
std::string to_compact(const Word& w);
Word parse_compact(std::string_view text, int rank);

/// Accepts either the compact form or a JSON array of signed integers.
Word parse_word(std::string_view text, int rank);

/// Highest basis index mentioned in a compact or JSON word, 0 for empty.
int max_letter_in(std::string_view text);

}  // namespace subset_currents
