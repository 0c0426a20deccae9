#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paramdiam/graph.hpp"
#include "paramdiam/traversal.hpp"

// Exact diameter given a vertex set K whose removal leaves a cograph.
//
// Every component of a cograph has diameter at most two, so a longest
// shortest path between two components of G - K passes through K within
// three steps of either end. Vertices outside K are bucketed by their
// distances to K capped at 4; one cross-component representative pair per
// bucket pair then determines the distance between the two buckets.
namespace paramdiam::cograph {

// Distances to x_1..x_|K|, each min(dist, 4).
using CappedTypeVector = std::vector<std::uint8_t>;

struct TypeRecord {
  static constexpr std::uint32_t kMultiple = static_cast<std::uint32_t>(-1);

  CappedTypeVector type;
  std::size_t count = 0;
  // Component of G - K holding the type, or kMultiple.
  std::uint32_t component = 0;
  // Representatives in distinct components of G - K (ids of G).
  std::array<Vertex, 2> representatives{kNoVertex, kNoVertex};
  std::size_t num_representatives = 0;
};

// Per component of a cograph: 0 for a singleton, 1 for a clique, else 2.
// With `verify` set, each non-clique component is checked by BFS to really
// have diameter two; throws InvalidModulatorError otherwise.
std::vector<Dist> component_diameters(const Graph& g_minus_k, const ComponentLabels& comps,
                                      bool verify = false);

// Buckets V \ K by capped type. `rows[i]` is the BFS row of k_set[i] over g,
// and component_of gives, for every vertex of g outside K, its component in
// G - K. Records appear in order of first occurrence by vertex id.
std::vector<TypeRecord> build_types(const Graph& g, std::span<const Vertex> k_set,
                                    std::span<const DistanceRow> rows,
                                    std::span<const std::uint32_t> component_of);

struct CographOptions {
  unsigned threads = 1;
  // Re-check a caller supplied K with find_induced_p4 on G - K.
  bool verify_modulator = true;
};

struct CographStats {
  std::size_t modulator_size = 0;
  std::size_t components = 0;
  std::size_t types = 0;
  std::size_t type_pairs_evaluated = 0;
};

// Throws DisconnectedError, and InvalidModulatorError when G - K is not a
// cograph. Without k_set the modulator is computed by P4 peeling.
Dist solve_cograph(const Graph& g, std::optional<std::vector<Vertex>> k_set = std::nullopt,
                   const CographOptions& options = {}, CographStats* stats = nullptr);

}  // namespace paramdiam::cograph
