#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "paramdiam/errors.hpp"
#include "paramdiam/generators.hpp"
#include "paramdiam/hindex.hpp"
#include "paramdiam/params.hpp"
#include "paramdiam/traversal.hpp"

using namespace paramdiam;
using namespace paramdiam::hindex;

namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edge_list(edges, n); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make(n, e);
}

}  // namespace

TEST_CASE("solve_hd examples") {
  Graph star = make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  HdStats stats;
  CHECK(solve_hd(star, std::nullopt, {}, &stats) == 2);
  CHECK(stats.hubs == 1);
  CHECK(stats.types == 1);
  CHECK(solve_hd(path(5), std::nullopt, {}, &stats) == 4);
  CHECK(stats.hubs == 2);
  CHECK(solve_hd(make(1, {})) == 0);
  CHECK(solve_hd(path(2)) == 1);
}

TEST_CASE("solve_hd errors") {
  CHECK_THROWS_AS(solve_hd(make(3, {{0, 1}})), DisconnectedError);
  CHECK_THROWS_AS(solve_hd(path(4), std::vector<Vertex>{9}), InvalidModulatorError);
  CHECK_THROWS_AS(solve_hd(path(4), std::vector<Vertex>{1, 1}), InvalidModulatorError);
}

TEST_CASE("solve_hd equals the oracle on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 5 + trial % 56;
    Graph g = trial % 3 == 0   ? gen_tree_plus_k(n, trial % 10, trial)
              : trial % 3 == 1 ? oracle::random_connected(n, 0.05 + 0.01 * (trial % 10), rng)
                               : gen_random_cograph_plus(n, 2, trial);
    REQUIRE(solve_hd(g) == *oracle::diameter(g));
  }
}

TEST_CASE("solve_hd accepts arbitrary hub sets") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected(20, 0.1, rng);
    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (rng() % 5 == 0) hubs.push_back(v);
    CHECK(solve_hd(g, hubs) == naive_diameter(g));
  }
  CHECK(solve_hd(path(6), std::vector<Vertex>{}) == 5);
}

TEST_CASE("iterations raise e monotonically and stop at the diameter") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_connected(30, 0.04, rng);
    std::vector<HdIteration> trace;
    HdOptions opts;
    opts.trace = [&](const HdIteration& it) { trace.push_back(it); };
    const Dist d = solve_hd(g, std::nullopt, opts);
    REQUIRE(!trace.empty());
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i].e == trace[i - 1].e + 1);
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) CHECK(trace[i].shortfall_vertex.has_value());
    CHECK_FALSE(trace.back().shortfall_vertex.has_value());
    CHECK(trace.back().e == d);
    CHECK(d == naive_diameter(g));
  }
}

TEST_CASE("truncated_bfs_count") {
  Graph g = path(5);
  std::vector<std::uint32_t> type_of{0, 1, 0, 1, 2};
  CHECK(truncated_bfs_count(g, 2, 0, type_of, 3) == std::vector<std::size_t>{1, 0, 0});
  CHECK(truncated_bfs_count(g, 2, 1, type_of, 3) == std::vector<std::size_t>{1, 2, 0});
  CHECK(truncated_bfs_count(g, 2, 10, type_of, 3) == std::vector<std::size_t>{2, 2, 1});

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    Graph h = oracle::random_connected(25, 0.05, rng);
    auto hubs = hub_set(h);
    auto rest = remove_vertices(h, hubs);
    const std::size_t r = rest.graph.num_vertices();
    std::vector<std::uint32_t> types(r);
    for (auto& t : types) t = static_cast<std::uint32_t>(rng() % 4);
    auto apsp = oracle::relaxation_apsp(rest.graph);
    for (Vertex v = 0; v < r; ++v) {
      const Dist depth = rng() % 5;
      std::vector<std::size_t> expected(4, 0);
      for (Vertex w = 0; w < r; ++w)
        if (apsp[v][w] <= depth) ++expected[types[w]];
      CHECK(truncated_bfs_count(rest.graph, v, depth, types, 4) == expected);
      std::vector<std::size_t> whole(4, 0);
      for (Vertex w = 0; w < r; ++w)
        if (apsp[v][w] != oracle::kInf) ++whole[types[w]];
      CHECK(truncated_bfs_count(rest.graph, v, r, types, 4) == whole);
    }
  }
}

TEST_CASE("paths within e that avoid the via-hub bound stay outside the hubs") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_connected(18, 0.1, rng);
    auto hubs = hub_set(g);
    auto rest = remove_vertices(g, hubs);
    auto full = oracle::relaxation_apsp(g);
    auto inner = oracle::relaxation_apsp(rest.graph);
    for (Vertex a = 0; a < rest.graph.num_vertices(); ++a)
      for (Vertex b = 0; b < rest.graph.num_vertices(); ++b) {
        const Vertex pa = rest.to_parent[a], pb = rest.to_parent[b];
        Dist via = oracle::kInf;
        for (Vertex x : hubs) via = std::min(via, full[pa][x] + full[x][pb]);
        CHECK(full[pa][pb] <= via);
        for (Dist e = 0; e <= 6; ++e)
          if (via > e && full[pa][pb] <= e) CHECK(inner[a][b] == full[pa][pb]);
      }
  }
}
