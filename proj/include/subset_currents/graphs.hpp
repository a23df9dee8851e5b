#pragma once

// Finite A^{±1}-labeled graphs (graphs over the rose R_N): folding, cores,
// coverings, fiber products and rooted-ball statistics.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subset_currents/words.hpp"

namespace subset_currents {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

/// Topological edge, stored in the orientation with positive label.
struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Letter label = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Oriented edge leaving a vertex.
struct Arc {
  Letter label;
  Vertex target;
  int edge;  // index into LabeledGraph::edges()
};

using LinkMask = std::uint64_t;

inline LinkMask letter_bit(Letter x) { return LinkMask{1} << letter_index(x); }
inline LinkMask full_link(int rank) {
  return rank * 2 >= 64 ? ~LinkMask{0} : (LinkMask{1} << (2 * rank)) - 1;
}

/// Thrown when a construction would produce the trivial subgroup (a forest
/// has no core).
class TrivialSubgroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Vertices are 0..vertex_count-1. Edges with negative labels are flipped to
  /// the positive orientation.
  LabeledGraph(int rank, int vertex_count, std::vector<Edge> edges);

  int rank() const { return rank_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Outgoing arcs of v ordered by (letter order, target).
  std::span<const Arc> arcs(Vertex v) const { return arcs_[v]; }
  /// First arc target with the given label, if any. Unique when folded.
  std::optional<Vertex> target(Vertex v, Letter x) const {
    Vertex t = next_[static_cast<std::size_t>(v) * 2 * rank_ + letter_index(x)];
    if (t == kNoVertex) return std::nullopt;
    return t;
  }
  /// Raw table lookup, kNoVertex when absent.
  Vertex step(Vertex v, Letter x) const {
    return next_[static_cast<std::size_t>(v) * 2 * rank_ + letter_index(x)];
  }

  int degree(Vertex v) const { return static_cast<int>(arcs_[v].size()); }
  LinkMask link_mask(Vertex v) const { return link_[v]; }
  bool has_full_link(Vertex v) const { return link_[v] == full_link(rank_); }

  bool is_folded() const { return folded_; }
  bool is_connected() const;
  bool is_core() const;
  /// |E_top| - |V|, i.e. minus the Euler characteristic.
  int negative_euler() const { return edge_count() - vertex_count_; }

  /// Subgraph on the kept vertices (relabelled in increasing old id).
  /// `old_to_new` receives kNoVertex for dropped vertices.
  LabeledGraph induced(const std::vector<bool>& keep, std::vector<Vertex>* old_to_new = nullptr) const;
  LabeledGraph without_edge(int edge_index) const;

 private:
  int rank_ = 2;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<Vertex> next_;
  std::vector<LinkMask> link_;
  bool folded_ = true;
};

/// Folded graph with every vertex of degree >= 2 ("cyclically reduced").
class CoreGraph {
 public:
  /// Throws std::invalid_argument unless g satisfies the core invariants.
  explicit CoreGraph(LabeledGraph g);

  const LabeledGraph& graph() const { return graph_; }
  operator const LabeledGraph&() const { return graph_; }  // NOLINT

  int rank() const { return graph_.rank(); }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }

 private:
  LabeledGraph graph_;
};

LabeledGraph rose(int rank);
/// Cycle reading the word once around; a loop for single letters. Not folded in
/// general (e.g. for non-cyclically-reduced input).
LabeledGraph cycle_graph(const Word& w);
/// Wedge of based loops reading each word, basepoint 0.
LabeledGraph wedge_of_loops(const std::vector<Word>& words, int rank);

/// Stallings folding. `quotient` receives the map from input to output
/// vertices. Output vertices are numbered by the least input id in their
/// class, so vertex 0 stays vertex 0.
LabeledGraph fold(const LabeledGraph& g, std::vector<Vertex>* quotient = nullptr);

/// Repeatedly deletes vertices of degree <= 1 other than `keep`
/// (kNoVertex: delete all of them).
LabeledGraph trim(const LabeledGraph& g, Vertex keep, std::vector<Vertex>* old_to_new = nullptr);

/// Core of a folded graph; throws TrivialSubgroupError for forests and
/// std::invalid_argument for unfolded input.
CoreGraph core(const LabeledGraph& g, std::vector<Vertex>* old_to_new = nullptr);

struct Cover {
  CoreGraph graph;
  std::vector<Vertex> projection;  // cover vertex -> base vertex
};

/// Connected n-sheeted cover: spanning-tree edges lift sheetwise, the first
/// non-tree edge carries the n-cycle, all other edges the identity.
Cover n_fold_cover(const CoreGraph& base, int n);

/// Whether vmap is a covering map total -> base.
bool check_covering(const LabeledGraph& total, const LabeledGraph& base,
                    const std::vector<Vertex>& vmap);

/// BFS spanning tree from root by (letter, target). parent_arc[v] is the arc
/// label leading into v (0 at the root and at unreachable vertices).
struct SpanningTree {
  std::vector<Vertex> parent;
  std::vector<Letter> parent_label;
  std::vector<bool> tree_edge;    // indexed by edge
  std::vector<Vertex> order;      // BFS discovery order
};
SpanningTree bfs_tree(const LabeledGraph& g, Vertex root);

struct FiberComponent {
  LabeledGraph graph;
  bool contractible = true;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // component vertex -> (v1, v2)
};

/// Pullback of two folded graphs over the rose, split into connected
/// components ordered by least pair id.
std::vector<FiberComponent> fiber_product(const LabeledGraph& d1, const LabeledGraph& d2);

/// Canonical serialization of the closed R-ball around root (vertices at
/// distance <= R, edges with an endpoint at distance < R). Requires a folded
/// graph.
std::string rooted_ball_form(const LabeledGraph& g, Vertex root, int radius);

std::map<std::string, int> ball_census(const LabeledGraph& g, int radius);

/// Canonical form of a connected folded graph up to vertex relabelling: least
/// rooted serialization over all roots (whole-graph BFS).
std::string graph_canonical_form(const LabeledGraph& g);

}  // namespace subset_currents
