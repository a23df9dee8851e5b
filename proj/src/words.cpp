#include "subset_currents/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include <json.hpp>

namespace subset_currents {

std::vector<Letter> alphabet(int rank) {
  std::vector<Letter> out;
  out.reserve(2 * rank);
  for (int i = 0; i < 2 * rank; ++i) out.push_back(letter_at(i));
  return out;
}

void check_rank(int rank) {
  if (rank < 2 || rank > kMaxRank) {
    throw std::invalid_argument("rank must be in [2, " + std::to_string(kMaxRank) +
                                "], got " + std::to_string(rank));
  }
}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(std::span<const Letter> letters, int rank) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (!valid_letter(x, rank)) {
      throw std::invalid_argument("invalid letter " + std::to_string(x) + " for rank " +
                                  std::to_string(rank));
    }
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

Word::Word(std::initializer_list<Letter> letters, int rank)
    : Word(std::span<const Letter>(letters.begin(), letters.size()), rank) {}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

Word Word::operator*(const Word& other) const {
  if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch in word product");
  Word out = *this;
  std::size_t i = 0;
  while (i < other.letters_.size() && !out.letters_.empty() &&
         out.letters_.back() == -other.letters_[i]) {
    out.letters_.pop_back();
    ++i;
  }
  out.letters_.insert(out.letters_.end(), other.letters_.begin() + i, other.letters_.end());
  return out;
}

Word Word::times(Letter x) const {
  if (!valid_letter(x, rank_)) throw std::invalid_argument("invalid letter");
  Word out = *this;
  if (!out.letters_.empty() && out.letters_.back() == -x) {
    out.letters_.pop_back();
  } else {
    out.letters_.push_back(x);
  }
  return out;
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out(rank_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_index(a[i]) < letter_index(b[i]);
  }
  return false;
}

Word reduce(std::span<const Letter> letters, int rank) { return Word(letters, rank); }

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& xs = w.letters();
  std::size_t lo = 0;
  std::size_t hi = xs.size();
  while (hi - lo >= 2 && xs[lo] == -xs[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(xs.begin() + lo, xs.begin() + hi);
  std::vector<Letter> conj(xs.begin(), xs.begin() + lo);
  return {Word(core, w.rank()), Word(conj, w.rank())};
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root of the trivial word");
  const Word core = cyclic_reduce(w).core;
  const auto& xs = core.letters();
  const std::size_t n = xs.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = xs[i] == xs[i - period];
    if (periodic) {
      std::vector<Letter> root(xs.begin(), xs.begin() + period);
      return {Word(root, w.rank()), static_cast<int>(n / period)};
    }
  }
  return {core, 1};  // unreachable: period n always matches
}

std::string to_compact(const Word& w) {
  if (w.rank() > kMaxCompactRank) throw std::invalid_argument("compact form needs rank <= 26");
  std::string out;
  out.reserve(w.size());
  for (Letter x : w.letters()) {
    out.push_back(x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1));
  }
  return out;
}

Word parse_compact(std::string_view text, int rank) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      letters.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      letters.push_back(-(c - 'A' + 1));
    } else if (c == '1' && text.size() == 1) {
      // "1" is accepted as the identity
    } else {
      throw std::invalid_argument("bad character '" + std::string(1, c) + "' in word \"" +
                                  std::string(text) + "\"");
    }
  }
  return Word(letters, rank);
}

static std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Word parse_word(std::string_view text, int rank) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    auto parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_array()) {
      throw std::invalid_argument("bad JSON word \"" + std::string(text) + "\"");
    }
    std::vector<Letter> letters;
    for (const auto& x : parsed) {
      if (!x.is_number_integer()) throw std::invalid_argument("JSON word entries must be integers");
      letters.push_back(x.get<int>());
    }
    return Word(letters, rank);
  }
  return parse_compact(text, rank);
}

int max_letter_in(std::string_view text) {
  text = trim(text);
  int best = 0;
  if (!text.empty() && text.front() == '[') {
    auto parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_array()) {
      for (const auto& x : parsed) {
        if (x.is_number_integer()) best = std::max(best, std::abs(x.get<int>()));
      }
    }
    return best;
  }
  for (char c : text) {
    if (c >= 'a' && c <= 'z') best = std::max(best, c - 'a' + 1);
    if (c >= 'A' && c <= 'Z') best = std::max(best, c - 'A' + 1);
  }
  return best;
}

}  // namespace subset_currents
