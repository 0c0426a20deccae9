#pragma once

#include <cstddef>
#include <cstdint>

#include "paramdiam/cnf.hpp"
#include "paramdiam/graph.hpp"

namespace paramdiam {

// Uniform random recursive tree on n vertices plus k distinct non-tree edges,
// with vertex ids randomly permuted. Feedback edge number is exactly k.
// Throws InfeasibleParameters when k > n(n-1)/2 - n + 1 or n == 0.
Graph gen_tree_plus_k(std::size_t n, std::size_t k, std::uint64_t seed);

// Random cotree on n vertices with a join at the root (so the cograph is
// connected), then `extra` vertices each joined to a nonempty random subset of
// the earlier vertices. Ids are randomly permuted.
Graph gen_random_cograph_plus(std::size_t n, std::size_t extra, std::uint64_t seed);

// G(n, p) resampled until connected. Throws InfeasibleParameters after
// max_attempts failures.
Graph gen_connected_er(std::size_t n, double p, std::uint64_t seed, std::size_t max_attempts = 1000);

// Random CNF with clause widths in [1, max_width] over distinct variables.
CnfFormula gen_random_cnf(std::size_t num_vars, std::size_t num_clauses, std::size_t max_width,
                          std::uint64_t seed);

}  // namespace paramdiam
