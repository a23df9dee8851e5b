#include "subset_currents/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "subset_currents/approximation.hpp"
#include "subset_currents/automorphisms.hpp"
#include "subset_currents/currents.hpp"
#include "subset_currents/io.hpp"
#include "subset_currents/subgroups.hpp"
#include "subset_currents/subtrees.hpp"

namespace subset_currents {

namespace {

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int rank = 0;
  std::string gens, word, graph, current = "absolute", lengths, h, l, d1, d2, phi, format, n_list = "1,2,4,8";
  int max_edges = 0;
  int max_ii = -1;
  int n = 2;
  int radius = 1;
  bool based = false;
  bool inverse = false;
};

std::string word_text(const Word& w) {
  if (w.rank() <= kMaxCompactRank) return w.empty() ? "1" : to_compact(w);
  return nlohmann::json(w.letters()).dump();
}

int spec_rank(std::string_view spec) {
  int best = 0;
  std::string s(spec);
  for (std::size_t pos = s.find("counting:"); pos != std::string::npos; pos = s.find("counting:", pos + 1)) {
    std::size_t end = s.find('+', pos);
    std::string path = s.substr(pos + 9, end == std::string::npos ? std::string::npos : end - pos - 9);
    path.erase(std::remove_if(path.begin(), path.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               path.end());
    best = std::max(best, read_graph_file(path).graph.rank());
  }
  if (auto pos = s.find("subgroup:"); pos != std::string::npos) {
    std::size_t end = s.find('+', pos);
    best = std::max(best, max_letter_in_generators(s.substr(pos + 9, end == std::string::npos ? std::string::npos : end - pos - 9)));
  }
  return best;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int rank() const {
    if (o_.rank) return o_.rank;
    int r = 2;
    for (const std::string* s : {&o_.gens, &o_.h, &o_.l, &o_.d1, &o_.d2}) {
      if (!s->empty()) r = std::max(r, max_letter_in_generators(*s));
    }
    if (!o_.word.empty()) r = std::max(r, max_letter_in(o_.word));
    if (!o_.graph.empty()) r = std::max(r, read_graph_file(o_.graph).graph.rank());
    if (!o_.lengths.empty()) r = std::max(r, static_cast<int>(parse_lengths(o_.lengths).size()));
    r = std::max(r, spec_rank(o_.current));
    return r;
  }

  Subgroup subgroup(const std::string& gens) const {
    if (gens.empty()) throw std::invalid_argument("missing generator list");
    return Subgroup::from_generators(parse_generators(gens, rank()), rank());
  }

  // Graph input from --graph (folded on the fly) or --gens.
  LabeledGraph input_graph(bool want_core) const {
    if (!o_.graph.empty()) {
      LabeledGraph g = fold(read_graph_file(o_.graph).graph);
      return want_core ? core(g).graph() : g;
    }
    Subgroup h = subgroup(o_.gens);
    return want_core ? h.core().graph() : h.based();
  }

  std::vector<SubtreeK> classes() const {
    if (o_.max_ii >= 0) return enumerate_classes_by_interior(rank(), o_.max_ii);
    return enumerate_classes(rank(), o_.max_edges > 0 ? o_.max_edges : 3);
  }

  MetricStructure lengths() const {
    if (o_.lengths.empty()) return MetricStructure::unit(rank());
    MetricStructure m(parse_lengths(o_.lengths));
    if (m.rank() != rank()) throw std::invalid_argument("need exactly one length per basis letter");
    return m;
  }

  void emit_graph(const LabeledGraph& g, std::optional<Vertex> base) {
    if (o_.format == "dot") {
      out_ << to_dot(g, base);
    } else {
      out_ << graph_to_json(g, base).dump() << '\n';
    }
  }

  void core_cmd() {
    if (!o_.graph.empty()) {
      emit_graph(input_graph(true), std::nullopt);
      return;
    }
    emit_graph(subgroup(o_.gens).core().graph(), std::nullopt);
  }

  void basis_cmd() {
    Subgroup h = subgroup(o_.gens);
    out_ << "rank\t" << h.rank() << '\n';
    for (const Word& w : h.basis()) out_ << word_text(w) << '\n';
  }

  void index_cmd() {
    auto idx = subgroup(o_.gens).index();
    out_ << (idx ? std::to_string(*idx) : "infinite") << '\n';
  }

  void comm_cmd() {
    Subgroup h = subgroup(o_.gens);
    Commensurator c = commensurator(h);
    nlohmann::json j;
    j["multiplicity"] = c.multiplicity;
    std::vector<std::string> basis;
    for (const Word& w : c.group.basis()) basis.push_back(word_text(w));
    j["basis"] = basis;
    j["rank"] = c.group.rank();
    j["core"] = graph_to_json(c.group.core().graph());
    out_ << j.dump() << '\n';
  }

  void contains_cmd() {
    if (o_.word.empty()) throw std::invalid_argument("missing --word");
    out_ << (subgroup(o_.gens).contains(parse_word(o_.word, rank())) ? "true" : "false") << '\n';
  }

  WeightSystem current() const {
    if (!o_.gens.empty()) return WeightSystem::counting(subgroup(o_.gens));
    return parse_current_spec(o_.current, rank());
  }

  void weights_cmd() { out_ << weight_table_tsv(current(), classes()); }

  void kirchhoff_cmd() {
    WeightSystem w = current();
    long checked = 0, failed = 0;
    for (const SubtreeK& k : classes()) {
      for (const TerminalEdge& e : k.terminal_edges()) {
        KirchhoffResult r = kirchhoff_check(w, k, e);
        ++checked;
        if (!r.ok) {
          ++failed;
          out_ << "FAIL\t" << k.serialize() << '\t' << word_text(e.from) << "->" << word_text(e.to) << '\t'
               << to_string(r.lhs) << '\t' << to_string(r.rhs) << '\n';
        }
      }
    }
    out_ << "checked\t" << checked << "\nfailed\t" << failed << '\n';
    if (failed) throw AssertionFailure("Kirchhoff identity failed");
  }

  void rrk_cmd() {
    if (!o_.gens.empty()) {
      Subgroup h = subgroup(o_.gens);
      Rational by_weights = reduced_rank(WeightSystem::counting(h));
      out_ << "weights\t" << to_string(by_weights) << "\neuler\t" << h.reduced_rank() << '\n';
      if (by_weights != h.reduced_rank()) throw AssertionFailure("reduced rank mismatch");
      return;
    }
    out_ << to_string(reduced_rank(current())) << '\n';
  }

  void covol_cmd() { out_ << to_string(covolume(lengths(), current())) << '\n'; }

  void tlen_cmd() {
    if (o_.word.empty()) throw std::invalid_argument("missing --word");
    out_ << to_string(translation_length(lengths(), parse_word(o_.word, rank()))) << '\n';
  }

  void meet_cmd() {
    Subgroup h = subgroup(o_.h);
    Subgroup l = subgroup(o_.l);
    IntersectionReport r = pitchfork(h, l);
    out_ << "components\t" << r.components.size() << '\n';
    for (const Subgroup& u : r.components) {
      out_ << "component\trank=" << u.rank();
      std::string sep = "\t";
      for (const Word& w : u.basis()) {
        out_ << sep << word_text(w);
        sep = ",";
      }
      out_ << '\n';
    }
    out_ << "J\t" << to_string(r.j) << "\nbound\t" << to_string(r.bound) << '\n';
    if (!r.within_bound()) throw AssertionFailure("J exceeds rrk(H) rrk(L)");
  }

  void cover_cmd() {
    if (o_.n < 1) throw std::invalid_argument("--n must be >= 1");
    CoreGraph base(input_graph(true));
    Cover c = n_fold_cover(base, o_.n);
    if (!check_covering(c.graph, base, c.projection)) throw AssertionFailure("cover check failed");
    emit_graph(c.graph, std::nullopt);
  }

  void approx_cmd() {
    std::vector<int> ns;
    std::stringstream ss(o_.n_list);
    for (std::string tok; std::getline(ss, tok, ',');) {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument("bad n value '" + tok + "'");
      ns.push_back(v);
    }
    ApproxSequence seq = approx_sequence(subgroup(o_.d1).core(), subgroup(o_.d2).core(), ns);
    if (!check_pieces(seq)) throw AssertionFailure("approximating graphs failed the covering check");
    ConvergenceReport rep = convergence_report(seq, o_.max_edges > 0 ? o_.max_edges : 3);
    out_ << "class\tn\tnormalized\ttarget\tresidual\n";
    for (const ConvergenceRow& r : rep.rows) {
      out_ << rep.classes[r.class_index].k.serialize() << '\t' << r.n << '\t' << to_string(r.normalized) << '\t'
           << to_string(r.target) << '\t' << to_string(r.residual) << '\n';
    }
    long worst = 0;
    for (const ClassSummary& c : rep.classes) worst = std::max(worst, c.constant);
    out_ << "# max C_K\t" << worst << '\n';
    if (!rep.within_bounds()) throw AssertionFailure("residual exceeds occurrence bound");
  }

  void census_cmd() {
    if (o_.radius < 0) throw std::invalid_argument("--radius must be >= 0");
    LabeledGraph g = input_graph(true);
    out_ << "ball\tcount\n";
    for (const auto& [form, count] : ball_census(g, o_.radius)) out_ << form << '\t' << count << '\n';
  }

  void aut_cmd() {
    if (o_.phi.empty()) throw std::invalid_argument("missing --phi");
    Automorphism phi = parse_automorphism(o_.phi, rank());
    if (o_.inverse) phi = phi.inverse();
    out_ << phi.to_string() << '\n';
    if (!o_.word.empty()) out_ << "image\t" << word_text(phi.apply(parse_word(o_.word, rank()))) << '\n';
    if (!o_.gens.empty()) {
      InvarianceReport r = invariance_report(phi, subgroup(o_.gens), o_.max_edges > 0 ? o_.max_edges : 5);
      auto idx = [](const std::optional<int>& i) { return i ? std::to_string(*i) : std::string("infinite"); };
      out_ << "rank\t" << r.rank_before << '\t' << r.rank_after << '\n'
           << "index\t" << idx(r.index_before) << '\t' << idx(r.index_after) << '\n'
           << "rrk\t" << to_string(r.rrk_before) << '\t' << to_string(r.rrk_after) << '\n';
      if (r.full_group) {
        out_ << "weights\t" << (r.weights_equal ? "equal up to budget" : "differ") << '\t' << r.classes_compared
             << '\n';
      }
      if (!r.ok()) throw AssertionFailure("automorphism invariance failed");
    }
  }

  void enum_cmd() {
    std::vector<SubtreeK> ks = classes();
    if (o_.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const SubtreeK& k : ks) j.push_back(subtree_to_json(k));
      out_ << j.dump() << '\n';
      return;
    }
    out_ << "class\tedges\tinterior\n";
    for (const SubtreeK& k : ks) out_ << k.serialize() << '\t' << k.edge_count() << '\t' << k.interior_count() << '\n';
  }

  void dot_cmd() {
    if (o_.based && o_.graph.empty()) {
      Subgroup h = subgroup(o_.gens);
      out_ << to_dot(h.based(), h.base());
      return;
    }
    out_ << to_dot(input_graph(true));
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroups of free groups and subset currents, in exact arithmetic", "subcur"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--rank", o.rank, "Rank N of the free group (default: inferred, at least 2)")
      ->check(CLI::Range(2, kMaxRank));

  auto add_gens = [&](CLI::App* c) { c->add_option("--gens", o.gens, "Comma-separated words or @file"); };
  auto add_graph = [&](CLI::App* c) { c->add_option("--graph", o.graph, "JSON graph file"); };
  auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "Output format (default " + allowed.front() + ")")->check(CLI::IsMember(allowed));
  };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--max-edges", o.max_edges, "Edge budget for enumerated classes")->check(CLI::PositiveNumber);
    c->add_option("--max-ii", o.max_ii, "Interior-vertex budget (overrides --max-edges)")->check(CLI::NonNegativeNumber);
  };
  auto add_current = [&](CLI::App* c) {
    c->add_option("--current", o.current, "counting:FILE | subgroup:GENS | uniform:d | absolute | combo:c*SPEC+...");
    add_gens(c);
  };

  std::vector<std::pair<CLI::App*, void (Runner::*)()>> commands;
  auto cmd = [&](const char* name, const char* help, void (Runner::*fn)()) {
    CLI::App* c = app.add_subcommand(name, help);
    commands.emplace_back(c, fn);
    return c;
  };

  {
    auto* c = cmd("core", "Core graph of a subgroup", &Runner::core_cmd);
    add_gens(c), add_graph(c), add_format(c, {"json", "dot"});
  }
  add_gens(cmd("basis", "Free basis from the based Stallings graph", &Runner::basis_cmd));
  add_gens(cmd("index", "Index in F_N", &Runner::index_cmd));
  add_gens(cmd("comm", "Commensurator and multiplicity", &Runner::comm_cmd));
  {
    auto* c = cmd("contains", "Membership test", &Runner::contains_cmd);
    add_gens(c);
    c->add_option("--word", o.word, "Word to test")->required();
  }
  {
    auto* c = cmd("weights", "Weight table (TSV)", &Runner::weights_cmd);
    add_current(c), add_budget(c);
  }
  {
    auto* c = cmd("kirchhoff", "Check the Kirchhoff identity on every class and terminal edge", &Runner::kirchhoff_cmd);
    add_current(c), add_budget(c);
  }
  add_current(cmd("rrk", "Reduced rank", &Runner::rrk_cmd));
  {
    auto* c = cmd("covol", "Co-volume against edge lengths", &Runner::covol_cmd);
    add_current(c);
    c->add_option("--lengths", o.lengths, "Comma-separated positive rationals, one per letter");
  }
  {
    auto* c = cmd("tlen", "Translation length", &Runner::tlen_cmd);
    c->add_option("--word", o.word, "Word")->required();
    c->add_option("--lengths", o.lengths, "Comma-separated positive rationals, one per letter");
  }
  {
    auto* c = cmd("meet", "Fiber-product intersections and the reduced-rank bound", &Runner::meet_cmd);
    c->set_help_flag("--help", "Print this help message and exit");
    c->add_option("--h", o.h, "Generators of H")->required();
    c->add_option("--l", o.l, "Generators of L")->required();
  }
  {
    auto* c = cmd("cover", "Connected n-fold cover of a core graph", &Runner::cover_cmd);
    add_gens(c), add_graph(c), add_format(c, {"json", "dot"});
    c->add_option("--n", o.n, "Number of sheets");
  }
  {
    auto* c = cmd("approx", "Convergence table for (1/n) Lambda_n", &Runner::approx_cmd);
    c->add_option("--d1", o.d1, "Generators of the first target")->required();
    c->add_option("--d2", o.d2, "Generators of the second target")->required();
    c->add_option("--n", o.n_list, "Comma-separated n values");
    c->add_option("--max-edges", o.max_edges, "Edge budget")->check(CLI::PositiveNumber);
  }
  {
    auto* c = cmd("census", "Rooted R-ball census", &Runner::census_cmd);
    add_gens(c), add_graph(c);
    c->add_option("--radius", o.radius, "Ball radius");
  }
  {
    auto* c = cmd("aut", "Apply an automorphism and report invariants", &Runner::aut_cmd);
    c->add_option("--phi", o.phi, "\"a->ab; b->b\" or \"nielsen: L12, I1\"")->required();
    c->add_option("--word", o.word, "Word to map");
    add_gens(c);
    c->add_flag("--inverse", o.inverse, "Use the inverse (Nielsen form only)");
    c->add_option("--max-edges", o.max_edges, "Edge budget for the weight comparison")->check(CLI::PositiveNumber);
  }
  {
    auto* c = cmd("enum-trees", "Enumerate translation classes of subtrees", &Runner::enum_cmd);
    add_budget(c), add_format(c, {"tsv", "json"});
  }
  {
    auto* c = cmd("dot", "DOT export of the core (or --based) graph", &Runner::dot_cmd);
    add_gens(c), add_graph(c);
    c->add_flag("--based", o.based, "Export the based Stallings graph");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      Runner runner(o, out);
      (runner.*fn)();
    }
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitAssertion;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace subset_currents
