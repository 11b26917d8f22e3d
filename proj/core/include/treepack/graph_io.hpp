#pragma once

#include <string>

#include "treepack/graph.hpp"

namespace treepack {

// PACE `.gr`: "p tw n m" header, 1-indexed "u v" edge lines, "c" comments.
Graph parse_gr(const std::string& text);
std::string emit_gr(const Graph& g);

// {"n": .., "edges": [[u,v],...], "labels": [...]} with 0-indexed vertices.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace treepack
