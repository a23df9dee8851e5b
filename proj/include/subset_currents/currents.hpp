#pragma once

// Weight systems K -> (K; mu) on translation classes of subtrees, realizing
// subset currents exactly over the rationals.

#include <memory>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "subset_currents/graphs.hpp"
#include "subset_currents/rational.hpp"
#include "subset_currents/subgroups.hpp"
#include "subset_currents/subtrees.hpp"

namespace subset_currents {

/// Number of occurrences of K in the core graph: label-preserving maps that
/// match links exactly at every vertex of K of degree >= 2.
long occurrences(const SubtreeK& k, const LabeledGraph& core);

class WeightSystem;

struct WeightTerm {
  Rational coefficient;
  std::shared_ptr<const WeightSystem> system;
};

class WeightSystem {
 public:
  struct Counting {
    CoreGraph graph;
  };
  struct UniformGrade {
    int grade;
    Integer branching;  // binomial(2N - 1, grade - 1)
  };
  struct AbsoluteUniform {
    Integer branching;  // 2^{2N-1} - 1
  };
  struct Combination {
    std::vector<WeightTerm> terms;
  };
  using Variant = std::variant<Counting, UniformGrade, AbsoluteUniform, Combination>;

  /// Counting current of the graph (every core graph is the core of its pi_1).
  static WeightSystem counting(CoreGraph graph);
  /// eta_H, computed from the core of H.
  static WeightSystem counting(const Subgroup& h);
  static WeightSystem uniform_grade(int rank, int grade);
  static WeightSystem absolute_uniform(int rank);
  /// Nonnegative combination; throws on a negative coefficient, rank mismatch
  /// or an empty term list.
  static WeightSystem combine(const std::vector<std::pair<Rational, WeightSystem>>& terms);
  static WeightSystem zero(int rank);

  int rank() const { return rank_; }
  const Variant& variant() const { return variant_; }
  std::string describe() const;

  Rational weight(const SubtreeK& k) const;

 private:
  WeightSystem(int rank, Variant v) : rank_(rank), variant_(std::move(v)) {}

  int rank_;
  Variant variant_;
};

/// Memoizes weights by canonical class.
class WeightCache {
 public:
  explicit WeightCache(const WeightSystem& system) : system_(system) {}
  Rational weight(const SubtreeK& k);

 private:
  const WeightSystem& system_;
  std::unordered_map<std::string, Rational> cache_;
};

struct KirchhoffResult {
  Rational lhs;
  Rational rhs;
  bool ok = false;
};

/// Weight of K against the sum over the extensions of K across e.
KirchhoffResult kirchhoff_check(const WeightSystem& w, const SubtreeK& k, const TerminalEdge& e);

/// Sum of basis-edge weights minus the weights of B_N.
Rational reduced_rank(const WeightSystem& w);

/// Positive rational length per basis letter; a point of the rose in outer
/// space.
class MetricStructure {
 public:
  explicit MetricStructure(std::vector<Rational> lengths);
  static MetricStructure unit(int rank);

  int rank() const { return static_cast<int>(lengths_.size()); }
  const Rational& length(Letter x) const { return lengths_[std::abs(x) - 1]; }
  const std::vector<Rational>& lengths() const { return lengths_; }

 private:
  std::vector<Rational> lengths_;
};

/// Sum over basis letters of (e_a; mu) L(a).
Rational covolume(const MetricStructure& lengths, const WeightSystem& w);

/// Length of the cyclic reduction of g.
Rational translation_length(const MetricStructure& lengths, const Word& g);

struct IntersectionReport {
  std::vector<Subgroup> components;  // one per non-contractible fiber component
  Rational j;                        // sum of reduced ranks of the components
  Rational bound;                    // rrk(H) rrk(L)
  int rank = 2;

  bool within_bound() const { return j <= bound; }
  /// Sum of the components' counting currents (zero if none).
  WeightSystem current() const;
};

IntersectionReport pitchfork(const Subgroup& h, const Subgroup& l);

}  // namespace subset_currents
