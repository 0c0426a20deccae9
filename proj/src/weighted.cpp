#include "paramdiam/weighted.hpp"

#include <algorithm>
#include <stdexcept>

#include "paramdiam/errors.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam {

Dist weighted_diameter_oracle(const WeightedDiameterInstance& inst) {
  const Graph& g = inst.graph;
  if (inst.pen.size() != g.num_vertices()) {
    throw std::invalid_argument("pen must have one entry per vertex");
  }
  if (!is_connected(g)) throw DisconnectedError();

  Dist best = inst.s;
  std::vector<Dist> dist;
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bfs_into(g, v, dist, queue);
    for (Vertex w = v + 1; w < g.num_vertices(); ++w) {
      best = std::max(best, inst.pen[v] + dist[w] + inst.pen[w]);
    }
  }
  return best;
}

}  // namespace paramdiam
