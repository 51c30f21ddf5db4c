#pragma once

#include "poramsey/graph.hpp"
#include "poramsey/poset.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace poramsey {

/// {"size": N, "labels": [...], "edges": [[i, j], ...]} with i < j, sorted.
nlohmann::json graph_to_json(const Graph & g);
/// Throws ParseError on malformed documents and VertexOutOfRange /
/// InvalidArgument on bad edges.
Graph graph_from_json(const nlohmann::json & doc);

/// Undirected DOT with quoted labels and edges in lexicographic order.
std::string to_dot(const Graph & g, std::string_view name = "G");

/// {"size": N, "leq": [[bool, ...], ...]}
nlohmann::json poset_to_json(const Poset & p);
/// Parses and validates; throws ParseError or one of the poset axiom errors.
Poset poset_from_json(const nlohmann::json & doc);

} // namespace poramsey
