#pragma once

// Finite non-degenerate subtrees K of the Cayley tree X_A containing the root,
// stored as prefix-closed sets of reduced words.

#include <string>
#include <vector>

#include "subset_currents/graphs.hpp"
#include "subset_currents/words.hpp"

namespace subset_currents {

/// Oriented edge from -> to of a subtree whose terminus `to` is a leaf.
struct TerminalEdge {
  Word from;
  Word to;
  Letter label;  // to = from * label

  friend bool operator==(const TerminalEdge&, const TerminalEdge&) = default;
};

class SubtreeK {
 public:
  /// Validates: contains the empty word, prefix-closed, at least one edge.
  SubtreeK(std::vector<Word> vertices, int rank);

  static SubtreeK edge(Letter x, int rank);
  /// Path from the root reading w.
  static SubtreeK segment(const Word& w);
  /// Root joined to each of the given letters.
  static SubtreeK star(const std::vector<Letter>& letters, int rank);

  int rank() const { return rank_; }
  /// Vertices in shortlex order; parents precede children.
  const std::vector<Word>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return vertex_count() - 1; }

  bool contains(const Word& v) const { return find(v) >= 0; }
  /// Position in vertices(), -1 if absent.
  int find(const Word& v) const;

  /// Throws std::invalid_argument if v is not a vertex.
  std::vector<Letter> link(const Word& v) const;
  LinkMask link_mask(const Word& v) const;
  int degree(const Word& v) const;
  int interior_count() const { return interior_; }

  // Indexed view used by the occurrence counter: vertex i's parent and the
  // letter read from the parent, plus its link.
  int parent(int i) const { return parent_[i]; }
  Letter parent_letter(int i) const { return parent_letter_[i]; }
  LinkMask link_mask_at(int i) const { return link_[i]; }
  int degree_at(int i) const;

  std::vector<TerminalEdge> terminal_edges() const;
  bool is_terminal(const TerminalEdge& e) const;

  /// v^{-1} K for a vertex v; again contains the root.
  SubtreeK reroot(const Word& v) const;

  /// Comma-separated compact words, e.g. ",a,ab" (root first).
  std::string serialize() const;

  friend bool operator==(const SubtreeK& a, const SubtreeK& b) {
    return a.rank_ == b.rank_ && a.vertices_ == b.vertices_;
  }
  /// Edge count first, then vertex lists compared element-wise in shortlex.
  friend bool operator<(const SubtreeK& a, const SubtreeK& b);

 private:
  void index();

  int rank_ = 2;
  std::vector<Word> vertices_;
  std::vector<int> parent_;
  std::vector<Letter> parent_letter_;
  std::vector<LinkMask> link_;
  int interior_ = 0;
};

/// The 2^{2N-1} - 1 trees K ∪ U over nonempty U ⊆ q(e), in increasing subset
/// bitmask order over the letters of q(e).
std::vector<SubtreeK> extensions(const SubtreeK& k, const TerminalEdge& e);

/// Least rerooting; equal iff the inputs are F_N-translates.
SubtreeK canonical_class(const SubtreeK& k);

/// All translation classes with 1..max_edges edges, sorted.
std::vector<SubtreeK> enumerate_classes(int rank, int max_edges);

/// All translation classes with at most max_interior interior vertices.
std::vector<SubtreeK> enumerate_classes_by_interior(int rank, int max_interior);

/// The set B_N: subtrees of the unit ball whose center has degree >= 2.
std::vector<SubtreeK> radius_one_stars(int rank);

}  // namespace subset_currents
