#include "paramdiam/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "paramdiam/errors.hpp"

namespace paramdiam {
namespace {

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Parses exactly `count` unsigned integers from the line; trailing text is an error.
std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t count,
                                         std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<std::uint64_t> out;
  std::string token;
  while (ss >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 19) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                       token + "'");
    }
    out.push_back(std::stoull(token));
  }
  if (out.size() != count) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) +
                     " integers, got " + std::to_string(out.size()));
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    if (!have_header) {
      auto hdr = parse_numbers(line, 2, line_no);
      n = hdr[0];
      m = hdr[1];
      if (n >= kNoVertex) throw VertexRangeError("vertex count too large");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(m) +
                       " edges");
    }
    auto uv = parse_numbers(line, 2, line_no);
    if (uv[0] >= n || uv[1] >= n) {
      throw VertexRangeError("line " + std::to_string(line_no) + ": vertex id out of range [0, " +
                             std::to_string(n) + ")");
    }
    edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  if (!have_header) throw ParseError("missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edge_list(edges, n);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(out, g);
}

std::vector<Vertex> read_vertex_list(std::istream& in, std::size_t n) {
  std::vector<Vertex> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 19) {
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
      }
      auto id = std::stoull(token);
      if (id >= n) {
        throw VertexRangeError("line " + std::to_string(line_no) + ": vertex " + token +
                               " out of range [0, " + std::to_string(n) + ")");
      }
      out.push_back(static_cast<Vertex>(id));
    }
  }
  std::sort(out.begin(), out.end());
  if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
    throw ParseError("vertex " + std::to_string(*dup) + " listed twice");
  }
  return out;
}

std::vector<Vertex> read_vertex_list_file(const std::filesystem::path& path, std::size_t n) {
  auto in = open_input(path);
  return read_vertex_list(in, n);
}

}  // namespace paramdiam
