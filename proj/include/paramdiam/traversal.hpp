#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paramdiam/graph.hpp"

namespace paramdiam {

// Unweighted shortest-path distances from one source; kUnreachable marks
// vertices outside the source's component.
struct DistanceRow {
  Vertex source = 0;
  std::vector<Dist> dist;
};

DistanceRow bfs(const Graph& g, Vertex source);

// Same as bfs() but reuses caller-owned scratch (queue and output row).
void bfs_into(const Graph& g, Vertex source, std::vector<Dist>& dist, std::vector<Vertex>& queue);

// BFS rows for each listed source, optionally computed on several threads.
std::vector<DistanceRow> bfs_rows(const Graph& g, std::span<const Vertex> sources,
                                  unsigned threads = 1);

// Diameter by BFS from every vertex. Throws DisconnectedError; 0 for n <= 1.
Dist naive_diameter(const Graph& g, unsigned threads = 1);

struct ComponentLabels {
  std::vector<std::uint32_t> label;
  std::uint32_t count = 0;
};

// Labels are assigned in order of the smallest vertex id of each component.
ComponentLabels connected_components(const Graph& g);

bool is_connected(const Graph& g);

bool is_bipartite(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<Dist> girth(const Graph& g);

// a + b, saturating at kUnreachable.
constexpr Dist add_dist(Dist a, Dist b) {
  return (a == kUnreachable || b == kUnreachable) ? kUnreachable : a + b;
}

}  // namespace paramdiam
