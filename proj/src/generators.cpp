#include "paramdiam/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "paramdiam/errors.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam {
namespace {

using Rng = std::mt19937_64;

std::uint64_t key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

Graph relabel(const std::vector<Edge>& edges, std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.push_back({perm[u], perm[v]});
  return Graph::from_edge_list(out, n);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void build_cotree(std::vector<Vertex>::iterator first, std::vector<Vertex>::iterator last, bool join,
                  Rng& rng, std::vector<Edge>& edges) {
  const auto size = static_cast<std::size_t>(last - first);
  if (size < 2) return;
  auto mid = first + static_cast<std::ptrdiff_t>(uniform(rng, 1, size - 1));
  if (join) {
    for (auto a = first; a != mid; ++a)
      for (auto b = mid; b != last; ++b) edges.push_back({*a, *b});
  }
  build_cotree(first, mid, std::bernoulli_distribution(0.5)(rng), rng, edges);
  build_cotree(mid, last, std::bernoulli_distribution(0.5)(rng), rng, edges);
}

}  // namespace

Graph gen_tree_plus_k(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw InfeasibleParameters("tree needs at least one vertex");
  const std::size_t capacity = n * (n - 1) / 2 - (n - 1);
  if (k > capacity) throw InfeasibleParameters("too many extra edges for " + std::to_string(n) + " vertices");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> present;
  for (Vertex v = 1; v < n; ++v) {
    auto parent = static_cast<Vertex>(uniform(rng, 0, v - 1));
    edges.push_back({parent, v});
    present.insert(key(parent, v));
  }
  if (2 * k <= capacity) {
    while (edges.size() < n - 1 + k) {
      auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
      auto v = static_cast<Vertex>(uniform(rng, 0, n - 1));
      if (u == v || !present.insert(key(u, v)).second) continue;
      edges.push_back({u, v});
    }
  } else {
    std::vector<Edge> missing;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!present.count(key(u, v))) missing.push_back({u, v});
    std::shuffle(missing.begin(), missing.end(), rng);
    edges.insert(edges.end(), missing.begin(), missing.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return relabel(edges, n, rng);
}

Graph gen_random_cograph_plus(std::size_t n, std::size_t extra, std::uint64_t seed) {
  if (n == 0) throw InfeasibleParameters("cograph part needs at least one vertex");
  Rng rng(seed);
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  std::vector<Edge> edges;
  build_cotree(ids.begin(), ids.end(), true, rng, edges);

  std::bernoulli_distribution pick(0.25);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto x = static_cast<Vertex>(n + i);
    bool any = false;
    for (Vertex v = 0; v < x; ++v) {
      if (pick(rng)) {
        edges.push_back({v, x});
        any = true;
      }
    }
    if (!any) edges.push_back({static_cast<Vertex>(uniform(rng, 0, x - 1)), x});
  }
  return relabel(edges, n + extra, rng);
}

Graph gen_connected_er(std::size_t n, double p, std::uint64_t seed, std::size_t max_attempts) {
  if (n == 0) throw InfeasibleParameters("graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw InfeasibleParameters("edge probability outside [0, 1]");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    Graph g = Graph::from_edge_list(edges, n);
    if (is_connected(g)) return g;
  }
  throw InfeasibleParameters("no connected sample after " + std::to_string(max_attempts) + " attempts");
}

CnfFormula gen_random_cnf(std::size_t num_vars, std::size_t num_clauses, std::size_t max_width,
                          std::uint64_t seed) {
  if (num_vars == 0 || max_width == 0) throw InfeasibleParameters("formula needs variables and width");
  Rng rng(seed);
  CnfFormula f{num_vars, {}};
  std::vector<int> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 1);
  for (std::size_t c = 0; c < num_clauses; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    const std::size_t width = uniform(rng, 1, std::min(max_width, num_vars));
    std::vector<int> clause;
    for (std::size_t i = 0; i < width; ++i)
      clause.push_back(std::bernoulli_distribution(0.5)(rng) ? vars[i] : -vars[i]);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace paramdiam
