#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sforest/graph.hpp"
#include "sforest/relation.hpp"
#include "sforest/relationship.hpp"

namespace sforest {

// All readers throw InvalidInput (or the model's own error kinds) on
// malformed documents. Writers emit sorted, deterministic documents.

/// {"domain": [...], "pairs": [["x","y"], ...]}
nlohmann::json to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);

/// {"domain": [...], "family": [[["x","y"], ...], ...]}
nlohmann::json to_json(const Relationship& r);
Relationship relationship_from_json(const nlohmann::json& j);

/// {"vertices": [...], "edges": [["x","y"], ...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// First line `vertices: x y z`, then one `a b` edge per line. Blank lines
/// and lines starting with '#' are skipped.
Graph graph_from_edge_list(std::string_view text);

/// JSON when the first non-blank character is '{', edge list otherwise.
Graph parse_graph(std::string_view text);

/// Sorted array of rendered terms.
nlohmann::json to_json(const ForestSet& fs);

/// {"frames": [[graph, ...], ...]}
nlohmann::json film_to_json(const std::vector<FilmFrame>& film);

std::string read_text_file(const std::string& path);

}  // namespace sforest
