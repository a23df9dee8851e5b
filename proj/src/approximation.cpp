#include "subset_currents/approximation.hpp"

#include <algorithm>
#include <cstdlib>

namespace subset_currents {

namespace {

bool is_regular(const LabeledGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.has_full_link(v)) return false;
  }
  return true;
}

Vertex least_deficient(const LabeledGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.has_full_link(v)) return v;
  }
  return kNoVertex;
}

// Drops the least-label edge at vertex 0 of a 2N-regular graph. Regular
// graphs have even degrees, so no edge is a bridge and the result stays
// connected with minimum degree >= 2.
LabeledGraph open_up(const LabeledGraph& g, std::vector<Edge>& deleted, int offset) {
  if (!is_regular(g)) return g;
  const Arc& arc = g.arcs(0).front();
  Edge e = g.edges()[arc.edge];
  deleted.push_back({e.from + offset, e.to + offset, e.label});
  return g.without_edge(arc.edge);
}

}  // namespace

JoinResult join_graphs(const CoreGraph& g1, const CoreGraph& g2) {
  if (g1.rank() != g2.rank()) throw std::invalid_argument("rank mismatch in join");
  if (!g1.graph().is_connected() || !g2.graph().is_connected()) {
    throw std::invalid_argument("join needs connected graphs");
  }
  const int rank = g1.rank();
  JoinResult r{CoreGraph(rose(rank)), 0, kNoVertex, kNoVertex, 0, 0, 0, {}, {}};
  LabeledGraph h1 = open_up(g1, r.deleted, 0);
  r.offset = h1.vertex_count();
  LabeledGraph h2 = open_up(g2, r.deleted, r.offset);

  const Vertex v1 = least_deficient(h1);
  const Vertex v2 = least_deficient(h2);
  const LinkMask link1 = h1.link_mask(v1);
  const LinkMask link2 = h2.link_mask(v2);
  const auto letters = alphabet(rank);
  bool found = false;
  for (Letter x1 : letters) {
    if (found || (link1 & letter_bit(x1))) continue;
    for (Letter x2 : letters) {
      if (found || x2 == -x1) continue;
      for (Letter x3 : letters) {
        if (x3 == -x2 || (link2 & letter_bit(-x3))) continue;
        r.x1 = x1, r.x2 = x2, r.x3 = x3;
        found = true;
        break;
      }
    }
  }
  if (!found) throw std::logic_error("no admissible arc labels");

  const int n1 = h1.vertex_count();
  const int n2 = h2.vertex_count();
  const Vertex p = n1 + n2;
  const Vertex q = p + 1;
  std::vector<Edge> edges = h1.edges();
  for (const Edge& e : h2.edges()) edges.push_back({e.from + n1, e.to + n1, e.label});
  r.v1 = v1;
  r.v2 = v2 + n1;
  edges.push_back({r.v1, p, r.x1});
  edges.push_back({p, q, r.x2});
  edges.push_back({q, r.v2, r.x3});
  r.graph = CoreGraph(LabeledGraph(rank, n1 + n2 + 2, std::move(edges)));

  r.touched = {r.v1, p, q, r.v2};
  for (const Edge& e : r.deleted) {
    r.touched.push_back(e.from);
    r.touched.push_back(e.to);
  }
  std::sort(r.touched.begin(), r.touched.end());
  r.touched.erase(std::unique(r.touched.begin(), r.touched.end()), r.touched.end());
  return r;
}

ApproxSequence approx_sequence(const CoreGraph& d1, const CoreGraph& d2, const std::vector<int>& n_list) {
  if (d1.rank() != d2.rank()) throw std::invalid_argument("rank mismatch in approximation");
  const int rank = d1.rank();
  const bool regular = is_regular(d1) && is_regular(d2);
  ApproxSequence seq{d1, d2, {}};
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("approximation index must be >= 1");
    if (regular) {
      Cover c = n_fold_cover(CoreGraph(rose(rank)), n * (d1.vertex_count() + d2.vertex_count()));
      ApproxTerm t{n, std::move(c.graph), true, {}, std::move(c.projection), {}};
      seq.terms.push_back(std::move(t));
      continue;
    }
    Cover c1 = n_fold_cover(d1, n);
    Cover c2 = n_fold_cover(d2, n);
    JoinResult j = join_graphs(c1.graph, c2.graph);
    const int total = j.graph.vertex_count();
    ApproxTerm t{n, j.graph, false, std::vector<Vertex>(total, -1), std::vector<Vertex>(total, kNoVertex),
                 j.touched};
    for (Vertex v = 0; v < total; ++v) {
      if (v < j.offset) {
        t.piece[v] = 0;
        t.projection[v] = c1.projection[v];
      } else if (v < j.offset + c2.graph.vertex_count()) {
        t.piece[v] = 1;
        t.projection[v] = c2.projection[v - j.offset];
      }
    }
    seq.terms.push_back(std::move(t));
  }
  return seq;
}

bool check_pieces(const ApproxSequence& seq) {
  const int rank = seq.d1.rank();
  const LabeledGraph base_rose = rose(rank);
  for (const ApproxTerm& t : seq.terms) {
    const LabeledGraph& g = t.graph;
    if (!g.is_connected()) return false;
    if (t.regular_branch) {
      if (g.vertex_count() != t.n * (seq.d1.vertex_count() + seq.d2.vertex_count())) return false;
      if (!check_covering(g, base_rose, t.projection)) return false;
      continue;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (t.piece[v] < 0 || std::binary_search(t.touched.begin(), t.touched.end(), v)) continue;
      const LabeledGraph& target = t.piece[v] == 0 ? seq.d1.graph() : seq.d2.graph();
      const Vertex pv = t.projection[v];
      if (g.link_mask(v) != target.link_mask(pv)) return false;
      for (const Arc& a : g.arcs(v)) {
        if (t.piece[a.target] != t.piece[v]) return false;
        if (target.step(pv, a.label) != t.projection[a.target]) return false;
      }
    }
  }
  return true;
}

bool ConvergenceReport::within_bounds() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConvergenceRow& r) { return r.scaled <= r.bound; });
}

bool ConvergenceReport::within_union_bounds() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const ClassSummary& c) { return Integer(c.constant) <= c.union_bound; });
}

ConvergenceReport convergence_report(const ApproxSequence& seq, int max_edges) {
  const int rank = seq.d1.rank();
  ConvergenceReport report;
  std::vector<SubtreeK> classes = enumerate_classes(rank, max_edges);
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const SubtreeK& k = classes[ci];
    const long target = occurrences(k, seq.d1) + occurrences(k, seq.d2);
    ClassSummary summary{k, 0, 0};
    mpz_ui_pow_ui(summary.union_bound.get_mpz_t(), 2 * rank - 1, k.edge_count());
    summary.union_bound *= 3;
    for (const ApproxTerm& t : seq.terms) {
      const long occ = occurrences(k, t.graph);
      ConvergenceRow row;
      row.class_index = static_cast<int>(ci);
      row.n = t.n;
      row.normalized = Rational(Integer(occ), Integer(t.n));
      row.normalized.canonicalize();
      row.target = target;
      row.scaled = std::labs(occ - static_cast<long>(t.n) * target);
      row.residual = Rational(Integer(row.scaled), Integer(t.n));
      row.residual.canonicalize();
      row.bound = 2L * static_cast<long>(t.touched.size()) * k.vertex_count();
      summary.constant = std::max(summary.constant, row.scaled);
      report.rows.push_back(std::move(row));
    }
    report.classes.push_back(std::move(summary));
  }
  return report;
}

}  // namespace subset_currents
