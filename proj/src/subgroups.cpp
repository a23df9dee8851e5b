#include "subset_currents/subgroups.hpp"

#include <algorithm>
#include <numeric>

namespace subset_currents {

Subgroup Subgroup::from_generators(const std::vector<Word>& generators, int rank) {
  check_rank(rank);
  for (const Word& w : generators) {
    if (w.rank() != rank) throw std::invalid_argument("generator rank mismatch");
  }
  return from_graph(wedge_of_loops(generators, rank), 0);
}

Subgroup Subgroup::from_graph(const LabeledGraph& g, Vertex base) {
  if (base < 0 || base >= g.vertex_count()) throw std::invalid_argument("basepoint out of range");
  std::vector<Vertex> quotient;
  LabeledGraph folded = fold(g, &quotient);
  Vertex folded_base = quotient[base];
  std::vector<Vertex> remap;
  LabeledGraph based = trim(folded, folded_base, &remap);
  Vertex new_base = remap[folded_base];
  CoreGraph c = subset_currents::core(based);
  return Subgroup(std::move(based), new_base, std::move(c));
}

Subgroup Subgroup::full_group(int rank) { return from_graph(rose(rank), 0); }

bool Subgroup::contains(const Word& w) const {
  if (w.rank() != ambient_rank()) throw std::invalid_argument("word rank mismatch");
  Vertex v = base_;
  for (Letter x : w.letters()) {
    v = based_.step(v, x);
    if (v == kNoVertex) return false;
  }
  return v == base_;
}

std::optional<int> Subgroup::index() const {
  for (Vertex v = 0; v < based_.vertex_count(); ++v) {
    if (!based_.has_full_link(v)) return std::nullopt;
  }
  return based_.vertex_count();
}

std::vector<Word> Subgroup::basis() const {
  const int rank = ambient_rank();
  SpanningTree tree = bfs_tree(based_, base_);
  std::vector<Word> path(based_.vertex_count(), Word(rank));
  for (Vertex v : tree.order) {
    if (v != base_) path[v] = path[tree.parent[v]].times(tree.parent_label[v]);
  }
  std::vector<int> order(based_.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge& ea = based_.edges()[a];
    const Edge& eb = based_.edges()[b];
    if (ea.from != eb.from) return ea.from < eb.from;
    if (ea.label != eb.label) return ea.label < eb.label;
    return ea.to < eb.to;
  });
  std::vector<Word> out;
  for (int idx : order) {
    if (tree.tree_edge[idx]) continue;
    const Edge& e = based_.edges()[idx];
    out.push_back(path[e.from].times(e.label) * path[e.to].inverse());
  }
  return out;
}

namespace {

// Congruence closure seeded by (a, b): classes must agree on links and be
// closed under following equal labels. Returns the class map on success.
std::optional<std::vector<Vertex>> covering_congruence(const LabeledGraph& g, Vertex a, Vertex b) {
  const int n = g.vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::vector<std::pair<Vertex, Vertex>> work{{a, b}};
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    Vertex ru = find(u);
    Vertex rv = find(v);
    if (ru == rv) continue;
    if (g.link_mask(ru) != g.link_mask(rv)) return std::nullopt;
    if (rv < ru) std::swap(ru, rv);
    parent[rv] = ru;
    for (const Arc& arc : g.arcs(rv)) work.emplace_back(arc.target, g.step(ru, arc.label));
  }
  std::vector<Vertex> cls(n);
  for (Vertex v = 0; v < n; ++v) cls[v] = find(v);
  return cls;
}

LabeledGraph quotient_graph(const LabeledGraph& g, const std::vector<Vertex>& cls,
                            std::vector<Vertex>& renumber) {
  const int n = g.vertex_count();
  renumber.assign(n, kNoVertex);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] == v) renumber[v] = count++;
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] != v) continue;
    for (const Arc& arc : g.arcs(v)) {
      if (arc.label > 0) edges.push_back({renumber[v], renumber[cls[arc.target]], arc.label});
    }
  }
  for (Vertex v = 0; v < n; ++v) renumber[v] = renumber[cls[v]];
  return LabeledGraph(g.rank(), count, std::move(edges));
}

}  // namespace

Commensurator commensurator(const Subgroup& h) {
  LabeledGraph current = h.core().graph();
  std::vector<Vertex> projection(current.vertex_count());
  std::iota(projection.begin(), projection.end(), 0);

  // Fibres of a covering of connected graphs all have the same size, so any
  // nontrivial covering congruence moves vertex 0.
  bool merged = true;
  while (merged) {
    merged = false;
    for (Vertex v = 1; v < current.vertex_count(); ++v) {
      auto cls = covering_congruence(current, 0, v);
      if (!cls) continue;
      std::vector<Vertex> renumber;
      current = quotient_graph(current, *cls, renumber);
      for (auto& p : projection) p = renumber[p];
      merged = true;
      break;
    }
  }
  const int m = h.core().vertex_count() / current.vertex_count();
  return {Subgroup::from_graph(current, 0), m, std::move(projection)};
}

}  // namespace subset_currents
