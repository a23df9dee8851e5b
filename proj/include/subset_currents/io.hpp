#pragma once

// File formats: JSON graphs and subtrees, DOT export, weight tables, and the
// textual specs accepted on the command line.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subset_currents/currents.hpp"
#include "subset_currents/graphs.hpp"
#include "subset_currents/subtrees.hpp"
#include "subset_currents/words.hpp"

namespace subset_currents {

/// {"rank", "vertices", "edges": [{"from", "to", "label"}], "base"?}, one
/// positive-label orientation per topological edge.
nlohmann::json graph_to_json(const LabeledGraph& g, std::optional<Vertex> base = std::nullopt);

struct ParsedGraph {
  LabeledGraph graph;
  std::optional<Vertex> base;
};

/// Vertex ids may be arbitrary integers; they are renumbered densely in
/// increasing order.
ParsedGraph graph_from_json(const nlohmann::json& j);
ParsedGraph read_graph_file(const std::string& path);

std::string to_dot(const LabeledGraph& g, std::optional<Vertex> base = std::nullopt);

nlohmann::json subtree_to_json(const SubtreeK& k);
SubtreeK subtree_from_json(const nlohmann::json& j);

/// Header plus one row per class: serialization, edges, interior count,
/// weight.
std::string weight_table_tsv(const WeightSystem& w, const std::vector<SubtreeK>& classes);

/// Comma-separated words, or @path to a file of words separated by commas,
/// whitespace or newlines.
std::vector<Word> parse_generators(std::string_view text, int rank);

/// Highest basis letter mentioned in a generator list (following @path).
int max_letter_in_generators(std::string_view text);

/// "counting:FILE", "subgroup:GENS", "uniform:d", "absolute", "zero",
/// "combo:c1*SPEC+c2*SPEC".
WeightSystem parse_current_spec(std::string_view text, int rank);

std::vector<Rational> parse_lengths(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace subset_currents
