#include "paramdiam/graph.hpp"

#include <algorithm>
#include <string>

#include "paramdiam/errors.hpp"

namespace paramdiam {

Graph Graph::from_edge_list(std::span<const Edge> edges, std::size_t n) {
  if (n >= kNoVertex) throw VertexRangeError("vertex count too large: " + std::to_string(n));
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw VertexRangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") references a vertex outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw DuplicateEdgeError("duplicate edge {" + std::to_string(v) + ", " +
                               std::to_string(*dup) + "}");
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph sub;
  sub.to_parent.assign(keep.begin(), keep.end());
  sub.from_parent.assign(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) sub.from_parent[keep[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      Vertex j = sub.from_parent[w];
      if (j != kNoVertex && i < j) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  sub.graph = Graph::from_edge_list(edges, keep.size());
  return sub;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> drop(g.num_vertices(), 0);
  for (Vertex v : removed) drop[v] = 1;
  std::vector<Vertex> keep;
  keep.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace paramdiam
