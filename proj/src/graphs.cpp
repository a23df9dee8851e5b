#include "subset_currents/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

namespace subset_currents {

// ---------------------------------------------------------------------------
// LabeledGraph
// ---------------------------------------------------------------------------

LabeledGraph::LabeledGraph(int rank, int vertex_count, std::vector<Edge> edges)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)) {
  check_rank(rank);
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    if (!valid_letter(e.label, rank)) {
      throw std::invalid_argument("edge label " + std::to_string(e.label) + " invalid for rank " +
                                  std::to_string(rank));
    }
    if (e.from < 0 || e.from >= vertex_count || e.to < 0 || e.to >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.label < 0) {
      std::swap(e.from, e.to);
      e.label = -e.label;
    }
  }
  arcs_.assign(vertex_count, {});
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    arcs_[e.from].push_back({e.label, e.to, i});
    arcs_[e.to].push_back({-e.label, e.from, i});
  }
  const std::size_t width = 2 * static_cast<std::size_t>(rank);
  next_.assign(static_cast<std::size_t>(vertex_count) * width, kNoVertex);
  link_.assign(vertex_count, 0);
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& arcs = arcs_[v];
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
      if (a.label != b.label) return letter_index(a.label) < letter_index(b.label);
      if (a.target != b.target) return a.target < b.target;
      return a.edge < b.edge;
    });
    for (const Arc& a : arcs) {
      auto& slot = next_[v * width + letter_index(a.label)];
      if (slot == kNoVertex) {
        slot = a.target;
      } else {
        folded_ = false;
      }
      link_[v] |= letter_bit(a.label);
    }
  }
}

bool LabeledGraph::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<bool> seen(vertex_count_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Arc& a : arcs_[v]) {
      if (!seen[a.target]) {
        seen[a.target] = true;
        ++count;
        stack.push_back(a.target);
      }
    }
  }
  return count == vertex_count_;
}

bool LabeledGraph::is_core() const {
  if (!folded_ || vertex_count_ == 0) return false;
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (degree(v) < 2) return false;
  }
  return true;
}

LabeledGraph LabeledGraph::induced(const std::vector<bool>& keep,
                                   std::vector<Vertex>* old_to_new) const {
  std::vector<Vertex> remap(vertex_count_, kNoVertex);
  int n = 0;
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (keep[v]) remap[v] = n++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (keep[e.from] && keep[e.to]) edges.push_back({remap[e.from], remap[e.to], e.label});
  }
  if (old_to_new) *old_to_new = remap;
  return LabeledGraph(rank_, n, std::move(edges));
}

LabeledGraph LabeledGraph::without_edge(int edge_index) const {
  std::vector<Edge> edges = edges_;
  edges.erase(edges.begin() + edge_index);
  return LabeledGraph(rank_, vertex_count_, std::move(edges));
}

// ---------------------------------------------------------------------------
// CoreGraph
// ---------------------------------------------------------------------------

CoreGraph::CoreGraph(LabeledGraph g) : graph_(std::move(g)) {
  if (!graph_.is_folded()) throw std::invalid_argument("core graph must be folded");
  if (graph_.vertex_count() == 0) throw std::invalid_argument("core graph must be nonempty");
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    if (graph_.degree(v) < 2) {
      throw std::invalid_argument("core graph vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(graph_.degree(v)));
    }
  }
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

LabeledGraph rose(int rank) {
  std::vector<Edge> edges;
  for (Letter x = 1; x <= rank; ++x) edges.push_back({0, 0, x});
  return LabeledGraph(rank, 1, std::move(edges));
}

LabeledGraph cycle_graph(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cycle_graph of the trivial word");
  const int n = static_cast<int>(w.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, w[i]});
  return LabeledGraph(w.rank(), n, std::move(edges));
}

LabeledGraph wedge_of_loops(const std::vector<Word>& words, int rank) {
  int n = 1;
  std::vector<Edge> edges;
  for (const Word& w : words) {
    if (w.empty()) continue;
    Vertex prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vertex next = i + 1 == w.size() ? 0 : n++;
      edges.push_back({prev, next, w[i]});
      prev = next;
    }
  }
  return LabeledGraph(rank, n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Folding and trimming
// ---------------------------------------------------------------------------

namespace {

class FoldState {
 public:
  FoldState(int n, int rank) : parent_(n), width_(2 * rank), table_(n * 2 * rank, kNoVertex) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_arc(Vertex from, Letter x, Vertex to) {
    Vertex r = find(from);
    auto& slot = table_[r * width_ + letter_index(x)];
    if (slot == kNoVertex) {
      slot = to;
    } else {
      pending_.emplace_back(slot, to);
    }
    drain();
  }

  Vertex entry(Vertex root, int index) const { return table_[root * width_ + index]; }
  int width() const { return width_; }

 private:
  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      merge(a, b);
    }
  }

  void merge(Vertex a, Vertex b) {
    Vertex ra = find(a);
    Vertex rb = find(b);
    if (ra == rb) return;
    // the smaller id stays the root, so every root is its class minimum
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
    for (int i = 0; i < width_; ++i) {
      Vertex moved = table_[rb * width_ + i];
      if (moved == kNoVertex) continue;
      auto& slot = table_[ra * width_ + i];
      if (slot == kNoVertex) {
        slot = moved;
      } else {
        pending_.emplace_back(slot, moved);
      }
    }
  }

  std::vector<Vertex> parent_;
  int width_;
  std::vector<Vertex> table_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
};

}  // namespace

LabeledGraph fold(const LabeledGraph& g, std::vector<Vertex>* quotient) {
  const int n = g.vertex_count();
  FoldState state(n, g.rank());
  for (const Edge& e : g.edges()) {
    state.add_arc(e.from, e.label, e.to);
    state.add_arc(e.to, -e.label, e.from);
  }
  std::vector<Vertex> remap(n, kNoVertex);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (state.find(v) == v) remap[v] = count++;
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    if (state.find(v) != v) continue;
    for (int i = 0; i < state.width(); ++i) {
      Letter x = letter_at(i);
      Vertex t = state.entry(v, i);
      if (x > 0 && t != kNoVertex) edges.push_back({remap[v], remap[state.find(t)], x});
    }
  }
  if (quotient) {
    quotient->assign(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) (*quotient)[v] = remap[state.find(v)];
  }
  return LabeledGraph(g.rank(), count, std::move(edges));
}

LabeledGraph trim(const LabeledGraph& g, Vertex keep, std::vector<Vertex>* old_to_new) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1 && v != keep) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (const Arc& a : g.arcs(v)) {
      if (a.target == v || !alive[a.target]) continue;
      if (--deg[a.target] <= 1 && a.target != keep) queue.push_back(a.target);
    }
  }
  return g.induced(alive, old_to_new);
}

CoreGraph core(const LabeledGraph& g, std::vector<Vertex>* old_to_new) {
  if (!g.is_folded()) throw std::invalid_argument("core requires a folded graph");
  LabeledGraph trimmed = trim(g, kNoVertex, old_to_new);
  if (trimmed.vertex_count() == 0) {
    throw TrivialSubgroupError("graph is a forest: the subgroup is trivial");
  }
  return CoreGraph(std::move(trimmed));
}

// ---------------------------------------------------------------------------
// Spanning trees and covers
// ---------------------------------------------------------------------------

SpanningTree bfs_tree(const LabeledGraph& g, Vertex root) {
  const int n = g.vertex_count();
  SpanningTree tree;
  tree.parent.assign(n, kNoVertex);
  tree.parent_label.assign(n, 0);
  tree.tree_edge.assign(g.edge_count(), false);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  tree.order.push_back(root);
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    Vertex v = tree.order[head];
    for (const Arc& a : g.arcs(v)) {
      if (seen[a.target]) continue;
      seen[a.target] = true;
      tree.parent[a.target] = v;
      tree.parent_label[a.target] = a.label;
      tree.tree_edge[a.edge] = true;
      tree.order.push_back(a.target);
    }
  }
  return tree;
}

Cover n_fold_cover(const CoreGraph& base, int n) {
  if (n < 1) throw std::invalid_argument("cover degree must be >= 1");
  const LabeledGraph& g = base.graph();
  if (!g.is_connected()) throw std::invalid_argument("n_fold_cover requires a connected graph");
  const int nv = g.vertex_count();
  SpanningTree tree = bfs_tree(g, 0);

  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge& ea = g.edges()[a];
    const Edge& eb = g.edges()[b];
    if (ea.from != eb.from) return ea.from < eb.from;
    if (ea.label != eb.label) return ea.label < eb.label;
    return ea.to < eb.to;
  });
  int cyclic_edge = -1;
  for (int idx : order) {
    if (!tree.tree_edge[idx]) {
      cyclic_edge = idx;
      break;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()) * n);
  for (int idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edges()[idx];
    const int shift = idx == cyclic_edge ? 1 : 0;
    for (int sheet = 0; sheet < n; ++sheet) {
      edges.push_back({sheet * nv + e.from, ((sheet + shift) % n) * nv + e.to, e.label});
    }
  }
  std::vector<Vertex> projection(static_cast<std::size_t>(nv) * n);
  for (int i = 0; i < nv * n; ++i) projection[i] = i % nv;
  return {CoreGraph(LabeledGraph(g.rank(), nv * n, std::move(edges))), std::move(projection)};
}

bool check_covering(const LabeledGraph& total, const LabeledGraph& base,
                    const std::vector<Vertex>& vmap) {
  if (static_cast<int>(vmap.size()) != total.vertex_count()) {
    throw std::invalid_argument("vertex map size does not match the covering graph");
  }
  if (total.rank() != base.rank()) throw std::invalid_argument("rank mismatch");
  if (!total.is_folded() || !base.is_folded()) {
    throw std::invalid_argument("check_covering requires folded graphs");
  }
  for (Vertex v = 0; v < total.vertex_count(); ++v) {
    Vertex image = vmap[v];
    if (image < 0 || image >= base.vertex_count()) {
      throw std::invalid_argument("vertex map value out of range");
    }
    if (total.link_mask(v) != base.link_mask(image)) return false;
    for (const Arc& a : total.arcs(v)) {
      if (base.step(image, a.label) != vmap[a.target]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fiber product
// ---------------------------------------------------------------------------

std::vector<FiberComponent> fiber_product(const LabeledGraph& d1, const LabeledGraph& d2) {
  if (d1.rank() != d2.rank()) throw std::invalid_argument("rank mismatch in fiber product");
  if (!d1.is_folded() || !d2.is_folded()) {
    throw std::invalid_argument("fiber product requires folded graphs");
  }
  const int n2 = d2.vertex_count();
  const int total = d1.vertex_count() * n2;
  auto pair_id = [n2](Vertex a, Vertex b) { return a * n2 + b; };

  std::vector<Edge> edges;
  for (const Edge& e1 : d1.edges()) {
    for (const Edge& e2 : d2.edges()) {
      if (e1.label == e2.label) {
        edges.push_back({pair_id(e1.from, e2.from), pair_id(e1.to, e2.to), e1.label});
      }
    }
  }

  std::vector<int> comp(total, -1);
  std::vector<std::vector<int>> adj(total);
  for (const Edge& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  int ncomp = 0;
  std::vector<std::vector<int>> members;
  for (int p = 0; p < total; ++p) {
    if (comp[p] != -1) continue;
    members.emplace_back();
    std::vector<int> stack{p};
    comp[p] = ncomp;
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      members.back().push_back(q);
      for (int r : adj[q]) {
        if (comp[r] == -1) {
          comp[r] = ncomp;
          stack.push_back(r);
        }
      }
    }
    std::sort(members.back().begin(), members.back().end());
    ++ncomp;
  }

  std::vector<Vertex> local(total);
  for (const auto& m : members) {
    for (std::size_t i = 0; i < m.size(); ++i) local[m[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Edge>> comp_edges(ncomp);
  for (const Edge& e : edges) comp_edges[comp[e.from]].push_back({local[e.from], local[e.to], e.label});

  std::vector<FiberComponent> out;
  out.reserve(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    FiberComponent fc;
    const int nv = static_cast<int>(members[c].size());
    const int ne = static_cast<int>(comp_edges[c].size());
    fc.graph = LabeledGraph(d1.rank(), nv, std::move(comp_edges[c]));
    fc.contractible = ne == nv - 1;
    for (int p : members[c]) fc.pairs.emplace_back(p / n2, p % n2);
    out.push_back(std::move(fc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rooted balls
// ---------------------------------------------------------------------------

namespace {

std::vector<int> distances(const LabeledGraph& g, Vertex root, int limit) {
  std::vector<int> dist(g.vertex_count(), std::numeric_limits<int>::max());
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] >= limit) continue;
    for (const Arc& a : g.arcs(v)) {
      if (dist[a.target] == std::numeric_limits<int>::max()) {
        dist[a.target] = dist[v] + 1;
        queue.push_back(a.target);
      }
    }
  }
  return dist;
}

std::string serialize_from(const LabeledGraph& g, Vertex root, int radius) {
  const int limit = radius < 0 ? std::numeric_limits<int>::max() : radius;
  std::vector<int> dist = distances(g, root, limit);
  std::vector<int> id(g.vertex_count(), -1);
  std::vector<Vertex> order{root};
  id[root] = 0;
  std::ostringstream out;
  bool first = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (const Arc& a : g.arcs(v)) {
      if (std::min(dist[v], dist[a.target]) >= limit) continue;
      if (id[a.target] == -1) {
        id[a.target] = static_cast<int>(order.size());
        order.push_back(a.target);
      }
      if (!first) out << ' ';
      first = false;
      out << id[v] << ':' << a.label << ':' << id[a.target];
    }
  }
  return std::to_string(order.size()) + "|" + out.str();
}

}  // namespace

std::string rooted_ball_form(const LabeledGraph& g, Vertex root, int radius) {
  if (!g.is_folded()) throw std::invalid_argument("rooted balls are canonical only for folded graphs");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
  return "R" + std::to_string(radius) + "|" + serialize_from(g, root, radius);
}

std::map<std::string, int> ball_census(const LabeledGraph& g, int radius) {
  std::map<std::string, int> tally;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++tally[rooted_ball_form(g, v, radius)];
  return tally;
}

std::string graph_canonical_form(const LabeledGraph& g) {
  if (!g.is_folded()) throw std::invalid_argument("canonical form needs a folded graph");
  if (g.vertex_count() == 0) return "0|";
  if (!g.is_connected()) throw std::invalid_argument("canonical form needs a connected graph");
  std::string best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::string s = serialize_from(g, v, -1);
    if (v == 0 || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace subset_currents
