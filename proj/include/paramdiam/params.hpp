#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paramdiam/graph.hpp"

namespace paramdiam {

// Structural parameters and deletion sets consumed by the solvers.
// Ties are broken by ascending vertex id everywhere, so results are replayable.

// Edges outside a BFS spanning tree rooted at vertex 0. Its size is the
// feedback edge number m - n + 1. Throws DisconnectedError.
std::vector<Edge> feedback_edge_set(const Graph& g);

// An induced path a-b-c-d (edges ab, bc, cd only), or nullopt iff g is a cograph.
// Runs in O(sum over edges of the neighbourhood sizes of their endpoints).
std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g);

// Repeatedly deletes the four vertices of an induced P4 until none is left.
// The result is sorted and its size is a multiple of four.
std::vector<Vertex> cograph_modulator(const Graph& g);

// The same peeling, abandoned with nullopt once the set would exceed `limit`.
std::optional<std::vector<Vertex>> cograph_modulator_within(const Graph& g, std::size_t limit);

// Largest l such that at least l vertices have degree >= l.
std::size_t h_index(const Graph& g);

// The h_index(g) vertices of largest degree (ties by smaller id), sorted.
// Every other vertex has degree <= h_index(g).
std::vector<Vertex> hub_set(const Graph& g);

// 2-approximate vertex deletion set to a clique, by repeatedly discarding
// universal vertices and deleting both ends of a non-adjacent pair. Linear time.
std::vector<Vertex> clique_modulator_2approx(const Graph& g);

struct DegreeStats {
  std::size_t max = 0;
  std::size_t min = 0;
  // Average degree as the exact fraction twice_edges / vertices.
  std::size_t twice_edges = 0;
  std::size_t vertices = 0;

  double average() const {
    return vertices == 0 ? 0.0 : static_cast<double>(twice_edges) / static_cast<double>(vertices);
  }
};

DegreeStats degree_stats(const Graph& g);

enum class ModulatorKind { feedback_edge, cograph_vertex_set, clique_vertex_set };

// Deletion set plus the class it promises. `edges` is used for the
// feedback-edge kind, `vertices` for the other two.
struct ModulatorResult {
  ModulatorKind kind;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t size() const {
    return kind == ModulatorKind::feedback_edge ? edges.size() : vertices.size();
  }
};

// Checks the class promise: a spanning tree remains, G - K is P4-free, or
// G - K is complete.
bool is_valid_modulator(const Graph& g, const ModulatorResult& mod);

// True iff every pair of vertices outside `removed` is adjacent.
bool is_clique_after_removal(const Graph& g, std::span<const Vertex> removed);

struct ParameterReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t feedback_edge_number = 0;
  std::size_t cograph_modulator_size = 0;
  std::size_t clique_modulator_size = 0;
  std::size_t h_index = 0;
  DegreeStats degrees;
};

// Throws DisconnectedError.
ParameterReport compute_parameters(const Graph& g);

}  // namespace paramdiam
