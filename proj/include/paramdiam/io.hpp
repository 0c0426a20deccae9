#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "paramdiam/graph.hpp"

namespace paramdiam {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v        (m lines, 0-based ids, whitespace separated)
//
// Comment lines may appear anywhere. Throws ParseError (or one of its
// subclasses for self-loops, duplicate edges and out-of-range ids).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

// Whitespace separated vertex ids, '#' comments allowed. Ids are checked
// against n and for duplicates; the result is sorted.
std::vector<Vertex> read_vertex_list(std::istream& in, std::size_t n);
std::vector<Vertex> read_vertex_list_file(const std::filesystem::path& path, std::size_t n);

}  // namespace paramdiam
