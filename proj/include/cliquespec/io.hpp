#pragma once

#include <filesystem>
#include <string>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/graph.hpp"

namespace cliquespec {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// Parse failures throw std::runtime_error naming the offending line.
Graph load_graph(const std::filesystem::path& path);
Graph parse_edge_list(const std::string& text, const std::string& origin);
std::string format_edge_list(const Graph& g);
void save_graph(const Graph& g, const std::filesystem::path& path);

// Clique-tree build recipe, JSON: {"blocks":[sizes],"attach":[[block,vertex],...]}.
BlockRecipe parse_recipe_json(const std::string& text);
Graph load_recipe(const std::filesystem::path& path);
std::string format_recipe_json(const BlockRecipe& r);

}  // namespace cliquespec
