#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "subset_currents/cli.hpp"
#include "subset_currents/io.hpp"
#include "support.hpp"

using namespace subset_currents;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = SUBCUR_TEST_DATA;

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, CoreEmitsJsonGraph) {
  CliResult r = run({"core", "--gens", "aa,b,abA"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 2u);
  EXPECT_EQ(j["edges"].size(), 4u);
}

TEST(Cli, CoreJsonRoundTrips) {
  testing_support::Rng rng(81);
  for (int t = 0; t < 20; ++t) {
    Subgroup h = testing_support::random_subgroup(rng, 2, 3, 6);
    std::string gens;
    for (const Word& w : h.basis()) gens += (gens.empty() ? "" : ",") + to_compact(w);
    CliResult r = run({"core", "--gens", gens});
    ASSERT_EQ(r.code, 0) << r.err;
    ParsedGraph back = graph_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(graph_canonical_form(back.graph), graph_canonical_form(h.core()));
  }
}

TEST(Cli, GraphFileInput) {
  CliResult r = run({"core", "--graph", kData + "/index2.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["vertices"].size(), 2u);
  r = run({"index", "--gens", "@" + kData + "/index2.gens"});
  EXPECT_EQ(r.out, "2\n");
  r = run({"rrk", "--current", "counting:" + kData + "/index2.json"});
  EXPECT_EQ(r.out, "2\n");
  r = run({"dot", "--graph", kData + "/index2.json"});
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
  EXPECT_NE(r.out.find("label=\"b\""), std::string::npos);
}

TEST(Cli, WeightsAbsolute) {
  CliResult r = run({"weights", "--current", "absolute", "--rank", "2", "--max-ii", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  EXPECT_EQ(ls[0], "class\tedges\tinterior\tweight");
  EXPECT_NE(std::find(ls.begin(), ls.end(), ",a\t1\t0\t1/2"), ls.end());
  EXPECT_NE(std::find(ls.begin(), ls.end(), ",a,A,b,B\t4\t1\t1/14"), ls.end());
}

TEST(Cli, MeetReportsBound) {
  CliResult r = run({"meet", "--h", "a,bb", "--l", "aa,b"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("J\t"), std::string::npos);
  EXPECT_NE(r.out.find("bound\t1"), std::string::npos);
}

TEST(Cli, Commands) {
  EXPECT_EQ(run({"basis", "--gens", "a,ab"}).out, "rank\t2\na\nb\n");
  EXPECT_EQ(run({"index", "--gens", "a"}).out, "infinite\n");
  EXPECT_EQ(run({"contains", "--gens", "aa,b,abA", "--word", "abAb"}).out, "true\n");
  EXPECT_EQ(run({"contains", "--gens", "a", "--word", "b"}).out, "false\n");
  auto comm = nlohmann::json::parse(run({"comm", "--gens", "ababab"}).out);
  EXPECT_EQ(comm["multiplicity"], 3);
  EXPECT_EQ(run({"rrk", "--gens", "aa,b,abA"}).out, "weights\t2\neuler\t2\n");
  EXPECT_EQ(run({"covol", "--gens", "aa,b,abA", "--lengths", "1,2"}).out, "6\n");
  EXPECT_EQ(run({"covol", "--current", "uniform:2", "--rank", "3"}).out, "1\n");
  EXPECT_EQ(run({"tlen", "--word", "ab", "--lengths", "1,2"}).out, "3\n");
  EXPECT_EQ(run({"tlen", "--word", "abA"}).out, "1\n");
  EXPECT_EQ(run({"kirchhoff", "--current", "combo:1/2*uniform:3+2*subgroup:ab", "--max-ii", "2"}).code, 0);
  auto cover = nlohmann::json::parse(run({"cover", "--gens", "a,b", "--n", "3"}).out);
  EXPECT_EQ(cover["vertices"].size(), 3u);
  CliResult census = run({"census", "--gens", "aa,b,abA", "--radius", "1"});
  EXPECT_EQ(lines(census.out).size(), 2u);
  CliResult enumerated = run({"enum-trees", "--max-edges", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(enumerated.out).size(), 8u);
  CliResult aut = run({"aut", "--phi", "a->ab; b->b", "--word", "a", "--gens", "a"});
  EXPECT_EQ(aut.code, 0) << aut.err;
  EXPECT_NE(aut.out.find("image\tab"), std::string::npos);
  CliResult inv = run({"aut", "--phi", "nielsen: L12", "--inverse", "--word", "a"});
  EXPECT_NE(inv.out.find("image\tBa"), std::string::npos);
  CliResult approx = run({"approx", "--d1", "a", "--d2", "b", "--n", "1,2", "--max-edges", "2"});
  EXPECT_EQ(approx.code, 0) << approx.err;
  EXPECT_EQ(lines(approx.out)[0], "class\tn\tnormalized\ttarget\tresidual");
}

TEST(Cli, RankInference) {
  EXPECT_EQ(run({"index", "--gens", "a,b,c"}).out, "1\n");
  EXPECT_EQ(run({"index", "--gens", "a,b"}).out, "1\n");
  EXPECT_EQ(run({"index", "--rank", "3", "--gens", "a,b"}).out, "infinite\n");
  EXPECT_EQ(run({"index", "--gens", "[1,2,3]"}).out, "infinite\n");
  EXPECT_EQ(run({"basis", "--gens", "[1, 2], [-2]"}).out, "rank\t2\na\nb\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"core"}).code, kExitUsage);
  EXPECT_EQ(run({"core", "--gens", "a%"}).code, kExitUsage);
  EXPECT_EQ(run({"core", "--gens", "aA"}).code, kExitUsage);
  EXPECT_EQ(run({"weights", "--current", "uniform:9"}).code, kExitUsage);
  EXPECT_EQ(run({"weights", "--current", "combo:-1*absolute"}).code, kExitUsage);
  EXPECT_EQ(run({"core", "--graph", "/nonexistent.json"}).code, kExitUsage);
  EXPECT_EQ(run({"aut", "--phi", "a->aa"}).code, kExitUsage);
  EXPECT_EQ(run({"aut", "--phi", "a->ab", "--inverse"}).code, kExitUsage);
  EXPECT_EQ(run({"covol", "--current", "absolute", "--lengths", "1,0"}).code, kExitUsage);
  EXPECT_EQ(run({"enum-trees", "--max-edges", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args{"weights", "--gens", "abAB,aab", "--max-edges", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> approx{"approx", "--d1", "ab", "--d2", "aB", "--n", "1,3"};
  EXPECT_EQ(run(approx).out, run(approx).out);
}

TEST(Io, GraphJsonValidation) {
  using nlohmann::json;
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[0]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"rank":2,"vertices":[0],"edges":[{"from":0,"to":1,"label":1}]})")),
               std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"rank":2,"vertices":[0,0]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"rank":2,"vertices":[0],"edges":[{"from":0,"to":0,"label":3}]})")),
               std::invalid_argument);
  ParsedGraph g = graph_from_json(json::parse(R"({"rank":2,"vertices":[5,7],"edges":[{"from":7,"to":5,"label":-1}],"base":7})"));
  EXPECT_EQ(g.base, 1);
  EXPECT_EQ(g.graph.edges()[0].from, 0);
  EXPECT_EQ(g.graph.edges()[0].label, 1);
}

TEST(Io, SubtreeJsonRoundTrip) {
  for (const SubtreeK& k : enumerate_classes(2, 3)) {
    EXPECT_EQ(subtree_from_json(subtree_to_json(k)), k);
  }
  auto j = subtree_to_json(SubtreeK::segment(parse_compact("ab", 2)));
  EXPECT_EQ(j.dump(), R"({"rank":2,"vertices":["","a","ab"]})");
}

TEST(Io, CurrentSpecs) {
  EXPECT_EQ(parse_current_spec("uniform:2", 2).weight(SubtreeK::edge(1, 2)), Rational(1, 2));
  EXPECT_EQ(parse_current_spec("combo:2*absolute+1/2*uniform:4", 2).weight(SubtreeK::edge(1, 2)), Rational(5, 4));
  EXPECT_EQ(parse_current_spec("zero", 2).weight(SubtreeK::edge(1, 2)), 0);
  EXPECT_THROW(parse_current_spec("uniform:x", 2), std::invalid_argument);
  EXPECT_THROW(parse_current_spec("nonsense", 2), std::invalid_argument);
  EXPECT_THROW(parse_current_spec("combo:1*absolute+", 2), std::invalid_argument);
}

TEST(Io, RationalText) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}
