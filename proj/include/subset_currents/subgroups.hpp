#pragma once

#include <optional>
#include <vector>

#include "subset_currents/graphs.hpp"
#include "subset_currents/words.hpp"

namespace subset_currents {

/// A nontrivial finitely generated subgroup H <= F_N, held as its based
/// Stallings graph (folded, hanging trees trimmed except the stem to the
/// basepoint) together with the core graph of its conjugacy class.
class Subgroup {
 public:
  /// Throws TrivialSubgroupError if every generator reduces to 1.
  static Subgroup from_generators(const std::vector<Word>& generators, int rank);
  /// pi_1(g, base); g need not be folded.
  static Subgroup from_graph(const LabeledGraph& g, Vertex base);
  static Subgroup full_group(int rank);

  int ambient_rank() const { return based_.rank(); }
  const LabeledGraph& based() const { return based_; }
  Vertex base() const { return base_; }
  const CoreGraph& core() const { return core_; }

  /// Rank of H as a free group.
  int rank() const { return based_.edge_count() - based_.vertex_count() + 1; }
  /// max(rank - 1, 0); equals |E| - |V| of the core.
  int reduced_rank() const { return core_.graph().negative_euler(); }

  bool contains(const Word& w) const;
  /// Index in F_N, or nullopt when infinite.
  std::optional<int> index() const;
  /// Free basis read off the BFS spanning tree at the basepoint; one word per
  /// non-tree edge in (from, label, to) order.
  std::vector<Word> basis() const;

 private:
  Subgroup(LabeledGraph based, Vertex base, CoreGraph core)
      : based_(std::move(based)), base_(base), core_(std::move(core)) {}

  LabeledGraph based_;
  Vertex base_ = 0;
  CoreGraph core_;
};

struct Commensurator {
  Subgroup group;          // represents Comm(H) up to conjugacy
  int multiplicity = 1;    // [Comm(H) : H]
  std::vector<Vertex> projection;  // core(H) vertex -> core(Comm(H)) vertex
};

/// Smallest quotient of core(H) through which it factors as a covering,
/// found by repeatedly merging vertex 0 with another vertex under the
/// link-respecting congruence closure.
Commensurator commensurator(const Subgroup& h);

}  // namespace subset_currents
