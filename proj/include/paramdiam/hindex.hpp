#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "paramdiam/graph.hpp"

// Exact diameter parameterized by h-index and diameter.
//
// Every non-hub vertex gets a type: its exact distances to the hubs. A
// candidate diameter e starts at the largest hub distance and is raised while
// some vertex v has a type class that is neither reachable within e through a
// hub nor fully reached by a depth-e BFS from v that avoids the hubs.
namespace paramdiam::hindex {

using HubTypeVector = std::vector<Dist>;

struct HubTypes {
  std::vector<HubTypeVector> types;     // distinct vectors, in order of first occurrence
  std::vector<std::size_t> totals;      // vertices per type
  std::vector<std::uint32_t> type_of;   // per vertex of G; kNoType for hubs
  static constexpr std::uint32_t kNoType = static_cast<std::uint32_t>(-1);
};

// For each type, how many of its vertices lie within `depth` of v in
// g_minus_h. type_of is indexed by vertices of g_minus_h.
std::vector<std::size_t> truncated_bfs_count(const Graph& g_minus_h, Vertex v, Dist depth,
                                             std::span<const std::uint32_t> type_of,
                                             std::size_t num_types);

struct HdIteration {
  Dist e = 0;
  std::size_t probes = 0;  // truncated BFS runs during this scan
  std::optional<Vertex> shortfall_vertex;
  std::optional<std::size_t> shortfall_type;
};

struct HdOptions {
  unsigned threads = 1;
  std::function<void(const HdIteration&)> trace;
};

struct HdStats {
  std::size_t hubs = 0;
  std::size_t types = 0;
  std::size_t iterations = 0;
  std::size_t probes = 0;
};

// Without `hubs` the hub set of params.hpp is used. Throws DisconnectedError;
// InvalidModulatorError for out-of-range or repeated hub ids.
Dist solve_hd(const Graph& g, std::optional<std::vector<Vertex>> hubs = std::nullopt,
              const HdOptions& options = {}, HdStats* stats = nullptr);

}  // namespace paramdiam::hindex
