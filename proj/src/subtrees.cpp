#include "subset_currents/subtrees.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace subset_currents {

namespace {

Word drop_last(const Word& w) {
  std::vector<Letter> xs(w.letters().begin(), w.letters().end() - 1);
  return Word(xs, w.rank());
}

bool vertex_lists_less(const std::vector<Word>& a, const std::vector<Word>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), shortlex_less);
}

}  // namespace

SubtreeK::SubtreeK(std::vector<Word> vertices, int rank) : rank_(rank), vertices_(std::move(vertices)) {
  check_rank(rank);
  for (const Word& w : vertices_) {
    if (w.rank() != rank) throw std::invalid_argument("subtree vertex has the wrong rank");
  }
  std::sort(vertices_.begin(), vertices_.end(), shortlex_less);
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.size() < 2) throw std::invalid_argument("subtree needs at least one edge");
  if (!vertices_.front().empty()) throw std::invalid_argument("subtree must contain the root");
  index();
}

void SubtreeK::index() {
  const int n = vertex_count();
  parent_.assign(n, -1);
  parent_letter_.assign(n, 0);
  link_.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    const Word& w = vertices_[i];
    int p = find(drop_last(w));
    if (p < 0) {
      throw std::invalid_argument("subtree is not prefix-closed: missing parent of " + to_compact(w));
    }
    parent_[i] = p;
    parent_letter_[i] = w.back();
    link_[i] |= letter_bit(-w.back());
    link_[p] |= letter_bit(w.back());
  }
  interior_ = 0;
  for (int i = 0; i < n; ++i) {
    if (std::popcount(link_[i]) >= 2) ++interior_;
  }
}

SubtreeK SubtreeK::edge(Letter x, int rank) { return SubtreeK({Word(rank), Word({x}, rank)}, rank); }

SubtreeK SubtreeK::segment(const Word& w) {
  std::vector<Word> vs;
  std::vector<Letter> prefix;
  vs.emplace_back(w.rank());
  for (Letter x : w.letters()) {
    prefix.push_back(x);
    vs.emplace_back(prefix, w.rank());
  }
  return SubtreeK(std::move(vs), w.rank());
}

SubtreeK SubtreeK::star(const std::vector<Letter>& letters, int rank) {
  std::vector<Word> vs{Word(rank)};
  for (Letter x : letters) vs.push_back(Word({x}, rank));
  return SubtreeK(std::move(vs), rank);
}

int SubtreeK::find(const Word& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v, shortlex_less);
  if (it == vertices_.end() || !(*it == v)) return -1;
  return static_cast<int>(it - vertices_.begin());
}

LinkMask SubtreeK::link_mask(const Word& v) const {
  int i = find(v);
  if (i < 0) throw std::invalid_argument("not a vertex of the subtree: " + to_compact(v));
  return link_[i];
}

std::vector<Letter> SubtreeK::link(const Word& v) const {
  LinkMask mask = link_mask(v);
  std::vector<Letter> out;
  for (Letter x : alphabet(rank_)) {
    if (mask & letter_bit(x)) out.push_back(x);
  }
  return out;
}

int SubtreeK::degree(const Word& v) const { return std::popcount(link_mask(v)); }
int SubtreeK::degree_at(int i) const { return std::popcount(link_[i]); }

std::vector<TerminalEdge> SubtreeK::terminal_edges() const {
  std::vector<TerminalEdge> out;
  for (int i = 0; i < vertex_count(); ++i) {
    if (degree_at(i) != 1) continue;
    const Word& leaf = vertices_[i];
    Letter into_leaf = 0;
    for (Letter x : alphabet(rank_)) {
      if (link_[i] & letter_bit(x)) into_leaf = -x;
    }
    out.push_back({leaf.times(-into_leaf), leaf, into_leaf});
  }
  return out;
}

bool SubtreeK::is_terminal(const TerminalEdge& e) const {
  if (e.from.rank() != rank_ || e.to.rank() != rank_) return false;
  int to = find(e.to);
  if (to < 0 || find(e.from) < 0 || degree_at(to) != 1) return false;
  return valid_letter(e.label, rank_) && e.from.times(e.label) == e.to;
}

SubtreeK SubtreeK::reroot(const Word& v) const {
  if (!contains(v)) throw std::invalid_argument("reroot at a non-vertex");
  Word inv = v.inverse();
  std::vector<Word> vs;
  vs.reserve(vertices_.size());
  for (const Word& u : vertices_) vs.push_back(inv * u);
  return SubtreeK(std::move(vs), rank_);
}

std::string SubtreeK::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out.push_back(',');
    out += to_compact(vertices_[i]);
  }
  return out;
}

bool operator<(const SubtreeK& a, const SubtreeK& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() < b.vertices_.size();
  return vertex_lists_less(a.vertices_, b.vertices_);
}

std::vector<SubtreeK> extensions(const SubtreeK& k, const TerminalEdge& e) {
  if (!k.is_terminal(e)) throw std::invalid_argument("edge is not a terminal edge of the subtree");
  std::vector<Letter> q;
  for (Letter x : alphabet(k.rank())) {
    if (x != -e.label) q.push_back(x);
  }
  const unsigned subsets = 1u << q.size();
  std::vector<SubtreeK> out;
  out.reserve(subsets - 1);
  for (unsigned mask = 1; mask < subsets; ++mask) {
    std::vector<Word> vs = k.vertices();
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (mask & (1u << j)) vs.push_back(e.to.times(q[j]));
    }
    out.emplace_back(std::move(vs), k.rank());
  }
  return out;
}

SubtreeK canonical_class(const SubtreeK& k) {
  const int n = k.vertex_count();
  std::vector<Word> best;
  std::vector<Word> candidate;
  candidate.reserve(n);
  for (const Word& v : k.vertices()) {
    Word inv = v.inverse();
    candidate.clear();
    for (const Word& u : k.vertices()) candidate.push_back(inv * u);
    std::sort(candidate.begin(), candidate.end(), shortlex_less);
    if (best.empty() || vertex_lists_less(candidate, best)) best = candidate;
  }
  return SubtreeK(std::move(best), k.rank());
}

std::vector<SubtreeK> enumerate_classes(int rank, int max_edges) {
  check_rank(rank);
  if (max_edges < 1) throw std::invalid_argument("max_edges must be >= 1");
  std::vector<SubtreeK> all;
  std::vector<SubtreeK> level;
  for (Letter x = 1; x <= rank; ++x) level.push_back(SubtreeK::edge(x, rank));
  std::sort(level.begin(), level.end());
  const auto letters = alphabet(rank);
  for (int edges = 1;; ++edges) {
    all.insert(all.end(), level.begin(), level.end());
    if (edges == max_edges) break;
    std::set<SubtreeK> next;
    for (const SubtreeK& k : level) {
      for (const Word& v : k.vertices()) {
        for (Letter x : letters) {
          Word w = v.times(x);
          if (k.contains(w)) continue;
          std::vector<Word> vs = k.vertices();
          vs.push_back(std::move(w));
          next.insert(canonical_class(SubtreeK(std::move(vs), rank)));
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  return all;
}

std::vector<SubtreeK> enumerate_classes_by_interior(int rank, int max_interior) {
  check_rank(rank);
  if (max_interior < 0) throw std::invalid_argument("max_interior must be >= 0");
  std::set<SubtreeK> all;
  std::vector<SubtreeK> level;
  for (Letter x = 1; x <= rank; ++x) level.push_back(SubtreeK::edge(x, rank));
  for (int ii = 0;; ++ii) {
    all.insert(level.begin(), level.end());
    if (ii == max_interior) break;
    std::set<SubtreeK> next;
    for (const SubtreeK& k : level) {
      for (const TerminalEdge& e : k.terminal_edges()) {
        for (const SubtreeK& ext : extensions(k, e)) next.insert(canonical_class(ext));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

std::vector<SubtreeK> radius_one_stars(int rank) {
  check_rank(rank);
  const auto letters = alphabet(rank);
  const unsigned subsets = 1u << letters.size();
  std::vector<SubtreeK> out;
  for (unsigned mask = 1; mask < subsets; ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<Letter> chosen;
    for (std::size_t j = 0; j < letters.size(); ++j) {
      if (mask & (1u << j)) chosen.push_back(letters[j]);
    }
    out.push_back(SubtreeK::star(chosen, rank));
  }
  return out;
}

}  // namespace subset_currents
