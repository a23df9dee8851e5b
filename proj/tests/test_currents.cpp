#include <gtest/gtest.h>

#include "support.hpp"

using namespace subset_currents;
using testing_support::Rng;

namespace {

Word w2(std::string_view s) { return parse_compact(s, 2); }

Subgroup sub2(std::initializer_list<std::string_view> gens) {
  std::vector<Word> ws;
  for (auto g : gens) ws.push_back(w2(g));
  return Subgroup::from_generators(ws, 2);
}

SubtreeK tree2(std::initializer_list<std::string_view> vs) {
  std::vector<Word> ws;
  for (auto v : vs) ws.push_back(w2(v));
  return SubtreeK(ws, 2);
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

void expect_kirchhoff(const WeightSystem& w, const std::vector<SubtreeK>& classes) {
  for (const SubtreeK& k : classes) {
    for (const TerminalEdge& e : k.terminal_edges()) {
      KirchhoffResult r = kirchhoff_check(w, k, e);
      EXPECT_TRUE(r.ok) << w.describe() << " at " << k.serialize() << ": " << to_string(r.lhs) << " vs "
                        << to_string(r.rhs);
    }
  }
}

}  // namespace

TEST(Occurrences, Examples) {
  LabeledGraph r2 = rose(2);
  EXPECT_EQ(occurrences(SubtreeK::edge(1, 2), r2), 1);
  EXPECT_EQ(occurrences(tree2({"", "a", "b"}), r2), 0);
  EXPECT_EQ(occurrences(tree2({"", "a", "aa"}), cycle_graph(w2("a"))), 1);
  EXPECT_THROW(occurrences(SubtreeK::edge(1, 3), r2), std::invalid_argument);
}

TEST(Occurrences, MatchesWalkOracle) {
  Rng rng(51);
  for (int rank : {2, 3}) {
    auto classes = enumerate_classes(rank, rank == 2 ? 4 : 3);
    for (int t = 0; t < 15; ++t) {
      CoreGraph d = testing_support::random_subgroup(rng, rank, 3, 6).core();
      for (const SubtreeK& k : classes) {
        ASSERT_EQ(occurrences(k, d), testing_support::occurrences_oracle(k, d)) << k.serialize();
      }
    }
  }
}

TEST(CountingCurrent, Examples) {
  WeightSystem f2 = WeightSystem::counting(Subgroup::full_group(2));
  EXPECT_EQ(f2.weight(SubtreeK::edge(1, 2)), 1);
  EXPECT_EQ(f2.weight(SubtreeK::edge(2, 2)), 1);
  EXPECT_EQ(f2.weight(tree2({"", "a", "A", "b", "B"})), 1);
  for (const SubtreeK& star : radius_one_stars(2)) {
    if (star.vertex_count() < 5) EXPECT_EQ(f2.weight(star), 0) << star.serialize();
  }

  WeightSystem a = WeightSystem::counting(sub2({"a"}));
  EXPECT_EQ(a.weight(SubtreeK::edge(1, 2)), 1);
  EXPECT_EQ(a.weight(SubtreeK::edge(2, 2)), 0);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(a.weight(SubtreeK::segment(w2("a").pow(n))), 1);

  WeightSystem idx2 = WeightSystem::counting(sub2({"aa", "b", "abA"}));
  EXPECT_EQ(idx2.weight(SubtreeK::edge(1, 2)), 2);
  EXPECT_EQ(idx2.weight(SubtreeK::edge(2, 2)), 2);
}

TEST(CountingCurrent, ConjugationInvariant) {
  Rng rng(52);
  auto classes = enumerate_classes(2, 4);
  for (int t = 0; t < 20; ++t) {
    auto gens = testing_support::random_generators(rng, 2, 3, 6);
    Word g = testing_support::random_nontrivial_word(rng, 2, 5);
    std::vector<Word> conj;
    for (const Word& x : gens) conj.push_back(g * x * g.inverse());
    auto a = testing_support::weight_vector(WeightSystem::counting(Subgroup::from_generators(gens, 2)), classes);
    auto b = testing_support::weight_vector(WeightSystem::counting(Subgroup::from_generators(conj, 2)), classes);
    EXPECT_EQ(a, b);
  }
}

TEST(UniformGrade, Examples) {
  WeightSystem m2 = WeightSystem::uniform_grade(2, 2);
  EXPECT_EQ(m2.weight(SubtreeK::segment(w2("aaa"))), q(1, 18));
  EXPECT_EQ(m2.weight(SubtreeK::edge(2, 2)), q(1, 2));
  EXPECT_EQ(WeightSystem::uniform_grade(2, 3).weight(tree2({"", "a", "aa"})), 0);
  EXPECT_THROW(WeightSystem::uniform_grade(2, 1), std::invalid_argument);
  EXPECT_THROW(WeightSystem::uniform_grade(2, 5), std::invalid_argument);
}

// <X, m> = 1 while <X, eta_F> = vol(R_N) = N, so the top grade is eta_F / N.
TEST(UniformGrade, TopGradeIsScaledFullGroupCurrent) {
  for (int rank : {2, 3}) {
    auto classes = enumerate_classes(rank, rank == 2 ? 5 : 4);
    WeightSystem scaled = WeightSystem::combine({{Rational(rank), WeightSystem::uniform_grade(rank, 2 * rank)}});
    WeightSystem full = WeightSystem::counting(Subgroup::full_group(rank));
    EXPECT_EQ(testing_support::weight_vector(scaled, classes), testing_support::weight_vector(full, classes));
    EXPECT_EQ(covolume(MetricStructure::unit(rank), WeightSystem::uniform_grade(rank, 2 * rank)), 1);
    EXPECT_EQ(covolume(MetricStructure::unit(rank), full), rank);
  }
}

TEST(UniformGrade, SegmentLaw) {
  for (int rank : {2, 3}) {
    WeightSystem m = WeightSystem::uniform_grade(rank, 2);
    for (int n = 1; n <= 8; ++n) {
      Integer denom = rank;
      for (int i = 1; i < n; ++i) denom *= 2 * rank - 1;
      EXPECT_EQ(m.weight(SubtreeK::segment(Word({1}, rank).pow(n))), Rational(Integer(1), denom));
    }
  }
}

TEST(AbsoluteUniform, Examples) {
  WeightSystem m = WeightSystem::absolute_uniform(2);
  EXPECT_EQ(m.weight(SubtreeK::edge(1, 2)), q(1, 2));
  EXPECT_EQ(m.weight(tree2({"", "a", "A", "b", "B"})), q(1, 14));
  EXPECT_EQ(m.weight(tree2({"", "a", "ab"})), q(1, 14));
  EXPECT_EQ(m.weight(tree2({"", "a", "ab", "abb"})), q(1, 98));
  for (const SubtreeK& k : enumerate_classes(2, 4)) EXPECT_GT(m.weight(k), 0);
}

TEST(Kirchhoff, Examples) {
  SubtreeK e = SubtreeK::edge(1, 2);
  TerminalEdge te{Word(2), w2("a"), 1};
  auto r = kirchhoff_check(WeightSystem::counting(Subgroup::full_group(2)), e, te);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, 1);
  r = kirchhoff_check(WeightSystem::absolute_uniform(2), e, te);
  EXPECT_EQ(r.rhs, q(1, 2));
  r = kirchhoff_check(WeightSystem::uniform_grade(2, 2), e, te);
  EXPECT_EQ(r.rhs, q(1, 2));
  int nonzero = 0;
  for (const SubtreeK& x : extensions(e, te)) nonzero += WeightSystem::uniform_grade(2, 2).weight(x) != 0;
  EXPECT_EQ(nonzero, 3);
  EXPECT_THROW(kirchhoff_check(WeightSystem::absolute_uniform(2), tree2({"", "a", "ab"}), {Word(2), w2("a"), 1}),
               std::invalid_argument);
}

TEST(Kirchhoff, HoldsForEverySystem) {
  Rng rng(53);
  for (int rank : {2, 3}) {
    auto classes = enumerate_classes(rank, rank == 2 ? 3 : 2);
    std::vector<WeightSystem> systems{WeightSystem::absolute_uniform(rank), WeightSystem::zero(rank)};
    for (int d = 2; d <= 2 * rank; ++d) systems.push_back(WeightSystem::uniform_grade(rank, d));
    for (int t = 0; t < 5; ++t) systems.push_back(WeightSystem::counting(testing_support::random_subgroup(rng, rank, 3, 6)));
    systems.push_back(WeightSystem::combine({{q(2, 3), systems[0]}, {q(5), systems.back()}, {q(0), systems[2]}}));
    for (const WeightSystem& w : systems) expect_kirchhoff(w, classes);
  }
}

TEST(Weights, TranslationInvariantAndCached) {
  Rng rng(54);
  WeightSystem w = WeightSystem::combine({{q(1, 3), WeightSystem::absolute_uniform(2)},
                                          {q(2), WeightSystem::counting(testing_support::random_subgroup(rng, 2, 3, 6))},
                                          {q(1), WeightSystem::uniform_grade(2, 3)}});
  WeightCache cache(w);
  for (const SubtreeK& k : enumerate_classes(2, 4)) {
    for (const Word& v : k.vertices()) {
      SubtreeK moved = k.reroot(v);
      EXPECT_EQ(w.weight(moved), w.weight(k));
      EXPECT_EQ(cache.weight(moved), w.weight(k));
    }
  }
}

TEST(Combine, Examples) {
  WeightSystem mu = WeightSystem::counting(sub2({"ab"}));
  WeightSystem nu = WeightSystem::absolute_uniform(2);
  auto classes = enumerate_classes(2, 3);
  for (const SubtreeK& k : classes) {
    EXPECT_EQ(WeightSystem::combine({{q(0), mu}}).weight(k), 0);
    EXPECT_EQ(WeightSystem::combine({{q(1), mu}, {q(0), nu}}).weight(k), mu.weight(k));
    EXPECT_EQ(WeightSystem::combine({{q(3), mu}}).weight(k),
              WeightSystem::counting(sub2({"ababab"})).weight(k));
  }
  EXPECT_EQ(WeightSystem::combine({{q(3), mu}}).weight(SubtreeK::edge(1, 2)), 3);
  EXPECT_THROW(WeightSystem::combine({{q(-1), mu}}), std::invalid_argument);
  EXPECT_THROW(WeightSystem::combine({{q(1), mu}, {q(1), WeightSystem::absolute_uniform(3)}}), std::invalid_argument);
  EXPECT_THROW(WeightSystem::combine({}), std::invalid_argument);
  EXPECT_THROW(mu.weight(SubtreeK::edge(1, 3)), std::invalid_argument);
}

TEST(ReducedRank, Examples) {
  EXPECT_EQ(reduced_rank(WeightSystem::counting(Subgroup::full_group(2))), 1);
  EXPECT_EQ(reduced_rank(WeightSystem::counting(sub2({"a"}))), 0);
  EXPECT_EQ(reduced_rank(WeightSystem::counting(sub2({"aa", "b", "abA"}))), 2);
}

TEST(ReducedRank, AgreesWithEulerCharacteristic) {
  Rng rng(55);
  for (int t = 0; t < 60; ++t) {
    const int rank = 2 + t % 2;
    Subgroup h = testing_support::random_subgroup(rng, rank, 4, 8);
    EXPECT_EQ(reduced_rank(WeightSystem::counting(h)), h.core().edge_count() - h.core().vertex_count());
  }
}

TEST(Covolume, Examples) {
  MetricStructure unit = MetricStructure::unit(2);
  MetricStructure l12({q(1), q(2)});
  EXPECT_EQ(covolume(unit, WeightSystem::counting(sub2({"ab"}))), 2);
  EXPECT_EQ(covolume(l12, WeightSystem::counting(sub2({"aa", "b", "abA"}))), 6);
  EXPECT_EQ(covolume(unit, WeightSystem::uniform_grade(2, 2)), 1);
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(covolume(MetricStructure::unit(3), WeightSystem::uniform_grade(3, d)), 1);
  EXPECT_THROW(MetricStructure({q(1), q(0)}), std::invalid_argument);
}

TEST(TranslationLength, Examples) {
  MetricStructure unit = MetricStructure::unit(2);
  MetricStructure l12({q(1), q(2)});
  EXPECT_EQ(translation_length(unit, w2("baBa")), 4);
  EXPECT_EQ(translation_length(unit, w2("abA")), 1);
  EXPECT_EQ(translation_length(l12, w2("ab")), 3);
  EXPECT_EQ(translation_length(l12, Word(2)), 0);
  EXPECT_EQ(covolume(l12, WeightSystem::counting(sub2({"ab"}))), 3);
}

TEST(Pitchfork, Examples) {
  IntersectionReport r = pitchfork(sub2({"a"}), sub2({"b"}));
  EXPECT_TRUE(r.components.empty());
  EXPECT_EQ(r.j, 0);

  r = pitchfork(sub2({"a"}), sub2({"aa", "b"}));
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(graph_canonical_form(r.components[0].core()), graph_canonical_form(cycle_graph(w2("aa"))));
  EXPECT_EQ(r.j, 0);

  r = pitchfork(sub2({"a", "bb"}), sub2({"aa", "b"}));
  EXPECT_EQ(r.bound, 1);
  EXPECT_TRUE(r.within_bound());
  EXPECT_THROW(pitchfork(sub2({"a"}), Subgroup::full_group(3)), std::invalid_argument);
}

TEST(Pitchfork, CyclicFactorGivesZero) {
  Rng rng(56);
  for (int t = 0; t < 40; ++t) {
    Subgroup h = testing_support::random_subgroup(rng, 2, 3, 6);
    Subgroup c = Subgroup::from_generators({testing_support::random_nontrivial_word(rng, 2, 6)}, 2);
    EXPECT_EQ(pitchfork(h, c).j, 0);
    EXPECT_EQ(pitchfork(c, h).j, 0);
  }
}

TEST(Pitchfork, MatchesSymmetricCounterpart) {
  Rng rng(57);
  for (int t = 0; t < 40; ++t) {
    Subgroup h = testing_support::random_subgroup(rng, 2, 3, 6);
    Subgroup l = testing_support::random_subgroup(rng, 2, 3, 6);
    IntersectionReport a = pitchfork(h, l);
    IntersectionReport b = pitchfork(l, h);
    EXPECT_EQ(a.j, b.j);
    EXPECT_EQ(a.components.size(), b.components.size());
    EXPECT_TRUE(a.within_bound());
  }
}
