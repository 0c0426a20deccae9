#pragma once

#include <vector>

#include "paramdiam/graph.hpp"

namespace paramdiam {

// A graph whose vertices carry the depth `pen` of pending structure that was
// folded into them, together with the best distance `s` already accounted for.
// The value of the instance is max{s, max_{v != w} pen(v) + dist(v, w) + pen(w)}.
struct WeightedDiameterInstance {
  Graph graph;
  std::vector<Dist> pen;
  Dist s = 0;

  static WeightedDiameterInstance unweighted(Graph g) {
    std::vector<Dist> pen(g.num_vertices(), 0);
    return {std::move(g), std::move(pen), 0};
  }
};

// Brute force over all unordered pairs of distinct vertices. Returns s for a
// single vertex. Throws DisconnectedError.
Dist weighted_diameter_oracle(const WeightedDiameterInstance& inst);

}  // namespace paramdiam
