#pragma once

#include <filesystem>
#include <string>

#include "topoforge/graph.hpp"

namespace topoforge {

// Edge-list text format: first line "N k R" (R in {0,1} = ring flag), then one
// "u v" line per edge, 0-indexed, u < v, sorted lexicographically.
std::string to_edge_list(const RegularGraph& g);
RegularGraph parse_edge_list(const std::string& text, std::string name = "");

// JSON document: {"name", "n", "k", "ring", "edges": [[u,v], ...]}.
std::string to_json(const RegularGraph& g);
RegularGraph parse_json(const std::string& text);

// Graphviz export; ring edges get style=bold.
std::string to_dot(const RegularGraph& g);

RegularGraph read_graph_file(const std::filesystem::path& path);  // by extension
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace topoforge
