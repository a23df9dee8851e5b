#pragma once

// Rational approximation of eta_{Delta_1} + eta_{Delta_2} by counting currents
// of single connected core graphs: (1/n) mu_{Lambda_n} -> mu_1 + mu_2.

#include <vector>

#include "subset_currents/currents.hpp"
#include "subset_currents/graphs.hpp"
#include "subset_currents/subtrees.hpp"

namespace subset_currents {

struct JoinResult {
  CoreGraph graph;
  // Vertex ids: g1 keeps 0..|V1|-1, g2 is shifted by |V1|, then the two
  // interior vertices of the arc.
  int offset = 0;
  Vertex v1 = kNoVertex;
  Vertex v2 = kNoVertex;
  Letter x1 = 0, x2 = 0, x3 = 0;
  std::vector<Edge> deleted;   // edges removed from 2N-regular inputs (joined ids)
  std::vector<Vertex> touched;  // v1, arc interior, v2, endpoints of deleted edges
};

/// Disjoint union of g1 and g2 joined by v1 -x1-> p -x2-> q -x3-> v2, with
/// v1, v2 the least vertices of deficient degree. A 2N-regular input first
/// loses the least-label edge at its vertex 0.
JoinResult join_graphs(const CoreGraph& g1, const CoreGraph& g2);

struct ApproxTerm {
  int n = 1;
  CoreGraph graph;
  bool regular_branch = false;      // graph is an n(m1+m2)-fold cover of R_N
  std::vector<Vertex> piece;        // 0 or 1 per vertex, -1 on the arc
  std::vector<Vertex> projection;   // vertex -> vertex of its target (or of R_N)
  std::vector<Vertex> touched;
};

struct ApproxSequence {
  CoreGraph d1;
  CoreGraph d2;
  std::vector<ApproxTerm> terms;
};

ApproxSequence approx_sequence(const CoreGraph& d1, const CoreGraph& d2, const std::vector<int>& n_list);

/// Every term is a connected core graph and, away from touched vertices, each
/// piece maps to its target as a covering (the whole graph covers R_N in the
/// regular branch).
bool check_pieces(const ApproxSequence& seq);

struct ConvergenceRow {
  int class_index = 0;
  int n = 1;
  Rational normalized;   // (K; Lambda_n) / n
  Rational target;       // (K; Delta_1) + (K; Delta_2)
  Rational residual;     // |normalized - target|
  long scaled = 0;       // n * residual
  long bound = 0;        // 2 |touched| |V(K)|
};

struct ClassSummary {
  SubtreeK k;
  long constant = 0;    // C_K: max over n of n * residual
  Integer union_bound;  // 3 (2N-1)^{|EK|}
};

struct ConvergenceReport {
  std::vector<ClassSummary> classes;
  std::vector<ConvergenceRow> rows;

  /// Every row respects its occurrence-counting bound.
  bool within_bounds() const;
  bool within_union_bounds() const;
};

ConvergenceReport convergence_report(const ApproxSequence& seq, int max_edges);

}  // namespace subset_currents
