#pragma once

#include <filesystem>
#include <string>

#include "backbone/graph.hpp"

namespace backbone {

// Canonical graph file:
//   {"coords": [[x,y(,z)],...]?, "edges": [[i,j],...], "labels": [...]?,
//    "metadata": {...}, "n": int}
// Keys are emitted in sorted order and edges in lexicographic (min,max) order,
// so serialize(graph_from_json(parse(s))) == s for canonical input.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

std::string serialize(const Graph& g);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path);

// Shared text-file helpers.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
Json load_json(const std::filesystem::path& path);
void save_json(const Json& j, const std::filesystem::path& path);

// One-line-per-file dump with trailing newline; the canonical form for every JSON
// artifact the toolkit writes.
std::string dump_canonical(const Json& j);

Json coords_to_json(const Coords& c);
Coords coords_from_json(const Json& j);

}  // namespace backbone
