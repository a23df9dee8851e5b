#pragma once

// Random generators and brute-force oracles shared by the unit and acceptance
// tests. Oracles avoid the library's indexed structures: they walk raw edge
// lists and compare word sets directly.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subset_currents/automorphisms.hpp"
#include "subset_currents/currents.hpp"
#include "subset_currents/graphs.hpp"
#include "subset_currents/subgroups.hpp"
#include "subset_currents/subtrees.hpp"
#include "subset_currents/words.hpp"

namespace testing_support {

using namespace subset_currents;

using Rng = std::mt19937_64;

inline Letter random_letter(Rng& rng, int rank) {
  std::uniform_int_distribution<int> d(0, 2 * rank - 1);
  return letter_at(d(rng));
}

/// Uniform-ish reduced word of exactly `len` letters.
inline Word random_reduced_word(Rng& rng, int rank, int len) {
  std::vector<Letter> xs;
  while (static_cast<int>(xs.size()) < len) {
    Letter x = random_letter(rng, rank);
    if (!xs.empty() && xs.back() == -x) continue;
    xs.push_back(x);
  }
  return Word(xs, rank);
}

inline Word random_nontrivial_word(Rng& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> d(1, max_len);
  return random_reduced_word(rng, rank, d(rng));
}

inline std::vector<Word> random_generators(Rng& rng, int rank, int max_gens, int max_len) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::vector<Word> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) gens.push_back(random_nontrivial_word(rng, rank, max_len));
  return gens;
}

inline Subgroup random_subgroup(Rng& rng, int rank, int max_gens, int max_len) {
  return Subgroup::from_generators(random_generators(rng, rank, max_gens, max_len), rank);
}

/// Random subgroup of rank >= `min_rank`.
inline Subgroup random_subgroup_of_rank(Rng& rng, int rank, int max_gens, int max_len, int min_rank) {
  for (;;) {
    Subgroup h = random_subgroup(rng, rank, max_gens, max_len);
    if (h.rank() >= min_rank) return h;
  }
}

inline Rational random_positive_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 20), den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Up to max_moves random Nielsen moves.
inline std::vector<NielsenMove> random_moves(Rng& rng, int rank, int max_moves) {
  std::vector<NielsenMove> moves;
  const int count = static_cast<int>(rng() % (max_moves + 1));
  for (int k = 0; k < count; ++k) {
    NielsenMove m;
    m.kind = static_cast<NielsenMove::Kind>(rng() % 4);
    m.i = 1 + static_cast<int>(rng() % rank);
    if (m.kind != NielsenMove::Kind::Invert) {
      do {
        m.j = 1 + static_cast<int>(rng() % rank);
      } while (m.j == m.i);
      if (m.kind != NielsenMove::Kind::Swap && rng() % 2) m.j = -m.j;
    }
    moves.push_back(m);
  }
  return moves;
}

// --- oracles ---------------------------------------------------------------

/// Walk along raw edges; -1 when some letter cannot be read.
inline Vertex walk(const LabeledGraph& g, Vertex v, const Word& w) {
  for (Letter x : w.letters()) {
    Vertex next = -1;
    for (const Edge& e : g.edges()) {
      if (x > 0 && e.label == x && e.from == v) next = e.to;
      if (x < 0 && e.label == -x && e.to == v) next = e.from;
      if (next != -1) break;
    }
    if (next == -1) return -1;
    v = next;
  }
  return v;
}

/// Outgoing letter set at v from the raw edge list.
inline std::set<Letter> raw_link(const LabeledGraph& g, Vertex v) {
  std::set<Letter> out;
  for (const Edge& e : g.edges()) {
    if (e.from == v) out.insert(e.label);
    if (e.to == v) out.insert(-e.label);
  }
  return out;
}

/// Occurrence count by reading each vertex word from every start vertex.
inline long occurrences_oracle(const SubtreeK& k, const LabeledGraph& g) {
  std::set<std::vector<Letter>> words;
  for (const Word& v : k.vertices()) words.insert(v.letters());
  long count = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    bool ok = true;
    for (const Word& v : k.vertices()) {
      Vertex image = walk(g, u, v);
      if (image < 0) {
        ok = false;
        break;
      }
      std::set<Letter> lk;
      for (Letter x : alphabet(k.rank())) {
        Word vx = v.times(x);
        if (words.count(vx.letters())) lk.insert(x);
      }
      if (lk.size() >= 2 && lk != raw_link(g, image)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

/// Least period of a cyclic word by doubling: the first rotation that
/// reproduces the word.
inline int least_period_oracle(const Word& cyclically_reduced) {
  const auto& xs = cyclically_reduced.letters();
  const int n = static_cast<int>(xs.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool same = true;
    for (int i = 0; i < n && same; ++i) same = xs[i] == xs[(i + p) % n];
    if (same) return p;
  }
  return n;
}

/// Calls f on every reduced word of length 1..max_len.
inline void for_each_reduced_word(int rank, int max_len, const std::function<void(const Word&)>& f) {
  std::vector<Letter> xs;
  std::function<void()> rec = [&]() {
    if (!xs.empty()) f(Word(xs, rank));
    if (static_cast<int>(xs.size()) == max_len) return;
    for (Letter x : alphabet(rank)) {
      if (!xs.empty() && xs.back() == -x) continue;
      xs.push_back(x);
      rec();
      xs.pop_back();
    }
  };
  rec();
}

/// Weights of w on each class, in class order.
inline std::vector<Rational> weight_vector(const WeightSystem& w, const std::vector<SubtreeK>& classes) {
  std::vector<Rational> out;
  out.reserve(classes.size());
  for (const SubtreeK& k : classes) out.push_back(w.weight(k));
  return out;
}

}  // namespace testing_support
