#include "subset_currents/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "subset_currents/subgroups.hpp"

namespace subset_currents {

using nlohmann::json;

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string letter_text(Letter x, int rank) {
  if (rank <= kMaxCompactRank) return to_compact(Word({x}, rank));
  return std::to_string(x);
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw std::invalid_argument(std::string("graph JSON: missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json graph_to_json(const LabeledGraph& g, std::optional<Vertex> base) {
  json j;
  j["rank"] = g.rank();
  json vs = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) vs.push_back(v);
  j["vertices"] = vs;
  json es = json::array();
  for (const Edge& e : g.edges()) es.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  j["edges"] = es;
  if (base) j["base"] = *base;
  return j;
}

ParsedGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
  const int rank = require_int(j, "rank");
  check_rank(rank);
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw std::invalid_argument("graph JSON: missing \"vertices\" array");
  }
  std::map<int, Vertex> ids;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("graph JSON: vertex ids must be integers");
    ids.emplace(v.get<int>(), 0);
  }
  if (ids.size() != j["vertices"].size()) throw std::invalid_argument("graph JSON: duplicate vertex id");
  Vertex next = 0;
  for (auto& [id, dense] : ids) dense = next++;
  auto lookup = [&](int id) {
    auto it = ids.find(id);
    if (it == ids.end()) throw std::invalid_argument("graph JSON: unknown vertex " + std::to_string(id));
    return it->second;
  };
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("graph JSON: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      edges.push_back({lookup(require_int(e, "from")), lookup(require_int(e, "to")), require_int(e, "label")});
    }
  }
  ParsedGraph out{LabeledGraph(rank, static_cast<int>(ids.size()), std::move(edges)), std::nullopt};
  if (j.contains("base") && !j["base"].is_null()) out.base = lookup(require_int(j, "base"));
  return out;
}

ParsedGraph read_graph_file(const std::string& path) {
  json j = json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("'" + path + "' is not valid JSON");
  return graph_from_json(j);
}

std::string to_dot(const LabeledGraph& g, std::optional<Vertex> base) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << v << "\"";
    if (base && *base == v) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << letter_text(e.label, g.rank()) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json subtree_to_json(const SubtreeK& k) {
  json vs = json::array();
  for (const Word& w : k.vertices()) {
    if (k.rank() <= kMaxCompactRank) {
      vs.push_back(to_compact(w));
    } else {
      vs.push_back(w.letters());
    }
  }
  return {{"rank", k.rank()}, {"vertices", vs}};
}

SubtreeK subtree_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("subtree JSON must be an object");
  const int rank = require_int(j, "rank");
  check_rank(rank);
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw std::invalid_argument("subtree JSON: missing \"vertices\" array");
  }
  std::vector<Word> vs;
  for (const auto& v : j["vertices"]) {
    if (v.is_string()) {
      vs.push_back(parse_compact(v.get<std::string>(), rank));
    } else if (v.is_array()) {
      vs.push_back(parse_word(v.dump(), rank));
    } else {
      throw std::invalid_argument("subtree JSON: vertices must be words");
    }
  }
  return SubtreeK(std::move(vs), rank);
}

std::string weight_table_tsv(const WeightSystem& w, const std::vector<SubtreeK>& classes) {
  std::ostringstream out;
  out << "class\tedges\tinterior\tweight\n";
  WeightCache cache(w);
  for (const SubtreeK& k : classes) {
    out << k.serialize() << '\t' << k.edge_count() << '\t' << k.interior_count() << '\t'
        << to_string(cache.weight(k)) << '\n';
  }
  return out.str();
}

namespace {

// Generator tokens: commas separate, and in files whitespace too; neither
// splits inside a JSON array.
std::vector<std::string> generator_tokens(std::string_view text) {
  text = trim_view(text);
  std::string storage;
  bool whitespace_separates = false;
  if (!text.empty() && text.front() == '@') {
    storage = read_text_file(std::string(text.substr(1)));
    text = storage;
    whitespace_separates = true;
  }
  std::vector<std::string> tokens;
  std::string token;
  int depth = 0;
  auto flush = [&] {
    std::string_view t = trim_view(token);
    if (!t.empty()) tokens.emplace_back(t);
    token.clear();
  };
  for (char c : text) {
    const bool space = std::isspace(static_cast<unsigned char>(c));
    if (depth == 0 && (c == ',' || (space && whitespace_separates))) {
      flush();
      continue;
    }
    if (c == '[') ++depth;
    if (c == ']' && depth > 0) --depth;
    token.push_back(c);
  }
  flush();
  return tokens;
}

}  // namespace

std::vector<Word> parse_generators(std::string_view text, int rank) {
  std::vector<Word> gens;
  for (const std::string& token : generator_tokens(text)) gens.push_back(parse_word(token, rank));
  if (gens.empty()) throw std::invalid_argument("no generators given");
  return gens;
}

int max_letter_in_generators(std::string_view text) {
  int best = 0;
  for (const std::string& token : generator_tokens(text)) best = std::max(best, max_letter_in(token));
  return best;
}

WeightSystem parse_current_spec(std::string_view text, int rank) {
  std::string_view s = trim_view(text);
  auto starts = [&](std::string_view p) { return s.substr(0, p.size()) == p; };
  if (s == "absolute") return WeightSystem::absolute_uniform(rank);
  if (s == "zero") return WeightSystem::zero(rank);
  if (starts("uniform:")) {
    std::string_view d = trim_view(s.substr(8));
    if (d.empty() || !std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw std::invalid_argument("bad uniform grade '" + std::string(d) + "'");
    }
    return WeightSystem::uniform_grade(rank, std::stoi(std::string(d)));
  }
  if (starts("counting:")) {
    ParsedGraph pg = read_graph_file(std::string(trim_view(s.substr(9))));
    if (pg.graph.rank() != rank) {
      throw std::invalid_argument("graph file has rank " + std::to_string(pg.graph.rank()) + ", expected " +
                                  std::to_string(rank));
    }
    return WeightSystem::counting(core(fold(pg.graph)));
  }
  if (starts("subgroup:")) {
    return WeightSystem::counting(Subgroup::from_generators(parse_generators(s.substr(9), rank), rank));
  }
  if (starts("combo:")) {
    std::string_view body = s.substr(6);
    std::vector<std::pair<Rational, WeightSystem>> terms;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i != body.size() && body[i] != '+') continue;
      std::string_view term = trim_view(body.substr(start, i - start));
      start = i + 1;
      if (term.empty()) throw std::invalid_argument("empty term in combination");
      Rational c = 1;
      std::string_view spec = term;
      if (auto star = term.find('*'); star != std::string_view::npos) {
        c = parse_rational(trim_view(term.substr(0, star)));
        spec = term.substr(star + 1);
      }
      if (trim_view(spec).substr(0, 6) == "combo:") throw std::invalid_argument("nested combinations are not supported");
      terms.emplace_back(c, parse_current_spec(spec, rank));
    }
    return WeightSystem::combine(terms);
  }
  throw std::invalid_argument("unknown current spec '" + std::string(s) + "'");
}

std::vector<Rational> parse_lengths(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      out.push_back(parse_rational(trim_view(text.substr(start, i - start))));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace subset_currents
