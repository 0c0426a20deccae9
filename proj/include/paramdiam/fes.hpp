#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "paramdiam/graph.hpp"
#include "paramdiam/weighted.hpp"

// Exact diameter in O(k * n) for graphs with feedback edge number k.
//
// Pending trees are peeled off one leaf at a time (degree-one rule) and
// pending cycles are collapsed into their anchor (pending-cycle rule); both
// record what they remove in the vertex weights `pen` and the scalar `s`.
// What survives consists of vertices of degree >= 3 joined by maximal paths of
// degree-two vertices, and the weighted diameter of that kernel is assembled
// from BFS out of the high-degree vertices plus closed-form sweeps along the
// paths.
namespace paramdiam::fes {

enum class Rule { degree_one, pending_cycle };

struct RuleEvent {
  Rule rule;
  // degree_one: the peeled leaf. pending_cycle: the anchor x0.
  Vertex vertex;
  // degree_one: the leaf's neighbour. pending_cycle: the anchor again.
  Vertex target;
  // pending_cycle only: x0, x1, ..., x_{a-1}.
  std::vector<Vertex> cycle;
  Dist s_before, s_after;
  Dist pen_before, pen_after;  // of `target`
};

using RuleObserver = std::function<void(const RuleEvent&)>;

// Mutable graph + weights threaded through the reduction rules. Vertex ids
// are those of the instance it was built from; deleted vertices stay
// addressable but are no longer alive.
class ReductionState {
 public:
  explicit ReductionState(WeightedDiameterInstance inst);

  const Graph& original() const { return inst_.graph; }
  std::size_t num_vertices() const { return inst_.graph.num_vertices(); }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::size_t alive_count() const { return alive_count_; }
  Dist pen(Vertex v) const { return inst_.pen[v]; }
  Dist s() const { return inst_.s; }

  // Alive neighbours of v.
  std::span<const Vertex> neighbors(Vertex v);

  bool adjacent(Vertex u, Vertex v);

  // The surviving graph with compacted ids. to_original[i] is the id of
  // compacted vertex i in this state.
  WeightedDiameterInstance snapshot(std::vector<Vertex>* to_original = nullptr) const;

  std::size_t degree_one_applications() const { return rr1_count_; }
  std::size_t pending_cycle_applications() const { return rr2_count_; }

 private:
  friend RuleEvent apply_rr1(ReductionState&, Vertex);
  friend RuleEvent apply_rr2(ReductionState&, std::span<const Vertex>);

  void kill(Vertex v);

  WeightedDiameterInstance inst_;
  std::vector<std::vector<Vertex>> live_adj_;  // compacted lazily
  std::vector<std::size_t> degree_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  std::size_t rr1_count_ = 0;
  std::size_t rr2_count_ = 0;
};

// Degree-one rule. With v the unique neighbour of u: delete u,
// s = max{s, pen(u) + pen(v) + 1}, pen(v) = max{pen(u) + 1, pen(v)}.
// Throws ContractViolation unless u is alive with degree exactly one.
RuleEvent apply_rr1(ReductionState& state, Vertex u);

// Pending-cycle rule on cycle = x0 x1 ... x_{a-1} (closing edge x_{a-1} x0
// implicit), where every x_i with i > 0 has degree two. Deletes x1..x_{a-1},
// folds the weighted diameter of the cycle into s and the furthest weighted
// distance from x0 into pen(x0). O(a). Throws ContractViolation if the
// sequence is not a pending cycle.
RuleEvent apply_rr2(ReductionState& state, std::span<const Vertex> cycle);

// Applies both rules until neither applies. Pure cycle components collapse
// onto their smallest vertex id.
void reduce_exhaustively(ReductionState& state, const RuleObserver& observer = {});

// High-degree vertices, maximal paths and pending cycles of a graph without
// degree-one vertices. Paths are stored x0..xa inclusive (x0 != xa, both of
// degree >= 3); an edge between two high vertices is a path with a = 1.
// Cycles are stored x0..x_{a-1} without repeating the anchor.
struct PathCycleDecomposition {
  std::vector<Vertex> high;
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::vector<Vertex>> cycles;
};

// Throws ContractViolation on a degree-one vertex.
PathCycleDecomposition decompose(const Graph& g);

// BFS rows of the high-degree vertices over the reduced graph.
struct HighDistanceTable {
  std::vector<Vertex> sources;
  std::vector<std::uint32_t> row_of;  // per vertex; kNoRow if not a source
  std::vector<std::vector<Dist>> rows;

  static constexpr std::uint32_t kNoRow = static_cast<std::uint32_t>(-1);

  Dist at(Vertex high, Vertex other) const { return rows[row_of[high]][other]; }
};

// Max of pen(v) + dist(v, u) + pen(u) over v in `high`, u != v.
Dist case1_high_bfs(const WeightedDiameterInstance& inst, std::span<const Vertex> high,
                    HighDistanceTable& table, unsigned threads = 1);

// Max over interior indices 0 < i < j < a of
//   pen[i] + min{j - i, i + endpoint_distance + (a - j)} + pen[j],
// where pen lists the weights along x0..xa. 0 when fewer than two interior
// vertices exist. O(a).
Dist case2_same_path(std::span<const Dist> pen, Dist endpoint_distance);

// Graph distances between the endpoints of x0..xa and y0..yb.
struct EndpointDistances {
  Dist x0_y0, x0_yb, xa_y0, xa_yb;
};

// Max over interior i of the first path and interior j of the second of
//   pen1[i] + D(i, j) + pen2[j], with
//   D(i, j) = min{i + d(x0,y0) + j, i + d(x0,yb) + (b - j),
//                 (a - i) + d(xa,y0) + j, (a - i) + d(xa,yb) + (b - j)}.
// 0 when either path has no interior. O(a + b).
Dist case3_path_pair(std::span<const Dist> pen1, std::span<const Dist> pen2,
                     const EndpointDistances& d);

// Weights along a vertex sequence.
std::vector<Dist> pen_along(const WeightedDiameterInstance& inst, std::span<const Vertex> seq);

struct FesStats {
  std::size_t degree_one_applications = 0;
  std::size_t pending_cycle_applications = 0;
  std::size_t kernel_vertices = 0;
  std::size_t high_vertices = 0;
  std::size_t maximal_paths = 0;
  std::size_t bfs_runs = 0;
};

struct FesOptions {
  unsigned threads = 1;
  RuleObserver observer;
};

// Throws DisconnectedError.
Dist solve_fes(const Graph& g, const FesOptions& options = {}, FesStats* stats = nullptr);

}  // namespace paramdiam::fes
