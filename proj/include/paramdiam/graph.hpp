#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace paramdiam {

using Vertex = std::uint32_t;
using Dist = std::uint64_t;

inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph in compressed adjacency form.
//
// Neighbour lists are sorted ascending; the graph is symmetric and carries no
// self-loops or parallel edges. Instances are cheap to share across threads.
class Graph {
 public:
  Graph() = default;

  // Throws VertexRangeError, SelfLoopError or DuplicateEdgeError.
  static Graph from_edge_list(std::span<const Edge> edges, std::size_t n);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// G[keep] with vertices renumbered 0..|keep|-1 in the order of `keep`.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // kNoVertex for dropped vertices
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// G - removed.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

}  // namespace paramdiam
