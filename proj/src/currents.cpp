#include "subset_currents/currents.hpp"

#include <algorithm>

namespace subset_currents {

long occurrences(const SubtreeK& k, const LabeledGraph& core) {
  if (k.rank() != core.rank()) throw std::invalid_argument("rank mismatch in occurrences");
  if (!core.is_folded()) throw std::invalid_argument("occurrences require a folded graph");
  const int n = k.vertex_count();
  std::vector<Vertex> image(n);
  long count = 0;
  for (Vertex u = 0; u < core.vertex_count(); ++u) {
    image[0] = u;
    bool ok = k.degree_at(0) < 2 || k.link_mask_at(0) == core.link_mask(u);
    for (int i = 1; ok && i < n; ++i) {
      Vertex t = core.step(image[k.parent(i)], k.parent_letter(i));
      if (t == kNoVertex) {
        ok = false;
        break;
      }
      image[i] = t;
      if (k.degree_at(i) >= 2 && k.link_mask_at(i) != core.link_mask(t)) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

WeightSystem WeightSystem::counting(CoreGraph graph) {
  const int rank = graph.rank();
  return WeightSystem(rank, Counting{std::move(graph)});
}

WeightSystem WeightSystem::counting(const Subgroup& h) { return counting(h.core()); }

WeightSystem WeightSystem::uniform_grade(int rank, int grade) {
  check_rank(rank);
  if (grade < 2 || grade > 2 * rank) {
    throw std::invalid_argument("uniform grade must be in [2, 2N], got " + std::to_string(grade));
  }
  return WeightSystem(rank, UniformGrade{grade, binomial(2 * rank - 1, grade - 1)});
}

WeightSystem WeightSystem::absolute_uniform(int rank) {
  check_rank(rank);
  Integer c = (Integer(1) << (2 * rank - 1)) - 1;
  return WeightSystem(rank, AbsoluteUniform{c});
}

WeightSystem WeightSystem::combine(const std::vector<std::pair<Rational, WeightSystem>>& terms) {
  if (terms.empty()) throw std::invalid_argument("combination needs at least one term");
  const int rank = terms.front().second.rank();
  Combination combo;
  for (const auto& [c, w] : terms) {
    if (c < 0) throw std::invalid_argument("negative coefficient " + to_string(c));
    if (w.rank() != rank) throw std::invalid_argument("rank mismatch in combination");
    combo.terms.push_back({c, std::make_shared<const WeightSystem>(w)});
  }
  return WeightSystem(rank, std::move(combo));
}

WeightSystem WeightSystem::zero(int rank) {
  check_rank(rank);
  return WeightSystem(rank, Combination{});
}

std::string WeightSystem::describe() const {
  struct Visitor {
    std::string operator()(const Counting& c) const {
      return "counting(V=" + std::to_string(c.graph.vertex_count()) +
             ",E=" + std::to_string(c.graph.edge_count()) + ")";
    }
    std::string operator()(const UniformGrade& u) const {
      return "uniform(d=" + std::to_string(u.grade) + ")";
    }
    std::string operator()(const AbsoluteUniform&) const { return "absolute"; }
    std::string operator()(const Combination& c) const {
      if (c.terms.empty()) return "zero";
      std::string out;
      for (const auto& t : c.terms) {
        if (!out.empty()) out += "+";
        out += to_string(t.coefficient) + "*" + t.system->describe();
      }
      return out;
    }
  };
  return std::visit(Visitor{}, variant_);
}

Rational WeightSystem::weight(const SubtreeK& k) const {
  if (k.rank() != rank_) throw std::invalid_argument("rank mismatch in weight");
  struct Visitor {
    const SubtreeK& k;
    int rank;
    Rational operator()(const Counting& c) const { return Rational(occurrences(k, c.graph)); }
    Rational operator()(const UniformGrade& u) const {
      for (int i = 0; i < k.vertex_count(); ++i) {
        const int deg = k.degree_at(i);
        if (deg != 1 && deg != u.grade) return Rational(0);
      }
      Integer denom = rank;
      for (int i = 0; i < k.interior_count(); ++i) denom *= u.branching;
      return Rational(Integer(1), denom);
    }
    Rational operator()(const AbsoluteUniform& a) const {
      Integer denom = rank;
      for (int i = 0; i < k.interior_count(); ++i) denom *= a.branching;
      return Rational(Integer(1), denom);
    }
    Rational operator()(const Combination& c) const {
      Rational sum = 0;
      for (const auto& t : c.terms) {
        if (t.coefficient != 0) sum += t.coefficient * t.system->weight(k);
      }
      return sum;
    }
  };
  return std::visit(Visitor{k, rank_}, variant_);
}

Rational WeightCache::weight(const SubtreeK& k) {
  std::string key = canonical_class(k).serialize();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Rational w = system_.weight(k);
  cache_.emplace(std::move(key), w);
  return w;
}

// ---------------------------------------------------------------------------

KirchhoffResult kirchhoff_check(const WeightSystem& w, const SubtreeK& k, const TerminalEdge& e) {
  KirchhoffResult r;
  r.lhs = w.weight(k);
  r.rhs = 0;
  for (const SubtreeK& ext : extensions(k, e)) r.rhs += w.weight(ext);
  r.ok = r.lhs == r.rhs;
  return r;
}

Rational reduced_rank(const WeightSystem& w) {
  Rational total = 0;
  for (Letter a = 1; a <= w.rank(); ++a) total += w.weight(SubtreeK::edge(a, w.rank()));
  for (const SubtreeK& k : radius_one_stars(w.rank())) total -= w.weight(k);
  return total;
}

// ---------------------------------------------------------------------------

MetricStructure::MetricStructure(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
  check_rank(static_cast<int>(lengths_.size()));
  for (const auto& l : lengths_) {
    if (l <= 0) throw std::invalid_argument("edge lengths must be positive, got " + to_string(l));
  }
}

MetricStructure MetricStructure::unit(int rank) {
  return MetricStructure(std::vector<Rational>(rank, Rational(1)));
}

Rational covolume(const MetricStructure& lengths, const WeightSystem& w) {
  if (lengths.rank() != w.rank()) throw std::invalid_argument("rank mismatch in covolume");
  Rational total = 0;
  for (Letter a = 1; a <= w.rank(); ++a) {
    total += w.weight(SubtreeK::edge(a, w.rank())) * lengths.length(a);
  }
  return total;
}

Rational translation_length(const MetricStructure& lengths, const Word& g) {
  if (lengths.rank() != g.rank()) throw std::invalid_argument("rank mismatch in translation length");
  Rational total = 0;
  const Word core = cyclic_reduce(g).core;
  for (Letter x : core.letters()) total += lengths.length(x);
  return total;
}

// ---------------------------------------------------------------------------

WeightSystem IntersectionReport::current() const {
  if (components.empty()) return WeightSystem::zero(rank);
  std::vector<std::pair<Rational, WeightSystem>> terms;
  for (const Subgroup& u : components) terms.emplace_back(Rational(1), WeightSystem::counting(u));
  return WeightSystem::combine(terms);
}

IntersectionReport pitchfork(const Subgroup& h, const Subgroup& l) {
  if (h.ambient_rank() != l.ambient_rank()) throw std::invalid_argument("rank mismatch in pitchfork");
  IntersectionReport report;
  report.rank = h.ambient_rank();
  report.j = 0;
  for (const FiberComponent& fc : fiber_product(h.core().graph(), l.core().graph())) {
    if (fc.contractible) continue;
    Subgroup u = Subgroup::from_graph(fc.graph, 0);
    report.j += u.reduced_rank();
    report.components.push_back(std::move(u));
  }
  report.bound = Rational(h.reduced_rank()) * Rational(l.reduced_rank());
  return report;
}

}  // namespace subset_currents
