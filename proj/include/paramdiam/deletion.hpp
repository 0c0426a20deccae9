#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "paramdiam/graph.hpp"

namespace paramdiam::deletion {

// Dense symmetric distance matrix over an ordered list of vertex ids.
class ApspMatrix {
 public:
  ApspMatrix() = default;
  explicit ApspMatrix(std::vector<Vertex> order);

  std::size_t size() const { return order_.size(); }
  const std::vector<Vertex>& order() const { return order_; }

  Dist at(std::size_t i, std::size_t j) const { return dist_[i * order_.size() + j]; }
  void set(std::size_t i, std::size_t j, Dist d) { dist_[i * order_.size() + j] = d; }

  // Largest entry; kUnreachable if any pair is disconnected.
  Dist max_entry() const;

  bool operator==(const ApspMatrix&) const = default;

 private:
  std::vector<Vertex> order_;
  std::vector<Dist> dist_;
};

// All-pairs BFS distances; order is 0..n-1.
ApspMatrix apsp_by_bfs(const Graph& g, unsigned threads = 1);

// Distances of a complete graph on `order`.
ApspMatrix clique_apsp(std::vector<Vertex> order);

// Exact distances of G over 0..n-1 from exact distances of G - K (whose order
// lists the ids of G outside K, in any order) and BFS rows from K:
// dist_G(a, c) = min{dist_{G-K}(a, c), min_{b in K} dist_G(a, b) + dist_G(b, c)}.
ApspMatrix combine_apsp(const Graph& g, std::span<const Vertex> k_set,
                        const ApspMatrix& apsp_without_k, unsigned threads = 1);

// Binary form: the text line "APSP n\n" followed by n*n little-endian
// unsigned 64-bit entries in row-major order (kUnreachable = 2^64 - 1).
// The order is not stored; a loaded matrix is over 0..n-1.
void write_apsp(std::ostream& out, const ApspMatrix& m);
ApspMatrix read_apsp(std::istream& in);

// Diameter from BFS rows of K alone, valid when G - K is a clique.
// K defaults to the 2-approximate clique modulator. Throws DisconnectedError,
// and InvalidModulatorError when G - K is not complete.
Dist solve_clique_modulator(const Graph& g, std::optional<std::vector<Vertex>> k_set = std::nullopt,
                            unsigned threads = 1);

}  // namespace paramdiam::deletion
