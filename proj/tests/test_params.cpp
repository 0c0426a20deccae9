#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "paramdiam/errors.hpp"
#include "paramdiam/generators.hpp"
#include "paramdiam/params.hpp"
#include "paramdiam/traversal.hpp"

using namespace paramdiam;

namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edge_list(edges, n); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return make(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return make(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make(leaves + 1, e);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> e;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return make(n, e);
}

// The complement of feedback_edge_set is a spanning tree.
void check_spanning_tree(const Graph& g, const std::vector<Edge>& fes) {
  CHECK(fes.size() == g.num_edges() - g.num_vertices() + 1);
  oracle::UnionFind uf(g.num_vertices());
  std::size_t tree_edges = 0;
  for (const auto& e : g.edges()) {
    if (std::find(fes.begin(), fes.end(), e) != fes.end()) continue;
    CHECK(uf.unite(e.u, e.v));
    ++tree_edges;
  }
  CHECK(tree_edges == g.num_vertices() - 1);
  CHECK(uf.sets == 1);
}

}  // namespace

TEST_CASE("feedback_edge_set") {
  CHECK(feedback_edge_set(path(7)).empty());
  CHECK(feedback_edge_set(cycle(5)).size() == 1);
  CHECK_THROWS_AS(feedback_edge_set(make(4, {{0, 1}, {2, 3}})), DisconnectedError);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_connected(10 + trial, 0.1, rng);
    auto fes = feedback_edge_set(g);
    for (const auto& e : fes) CHECK(g.has_edge(e.u, e.v));
    check_spanning_tree(g, fes);
  }
}

TEST_CASE("find_induced_p4") {
  auto p4 = find_induced_p4(path(4));
  REQUIRE(p4.has_value());
  CHECK(oracle::is_induced_p4(path(4), (*p4)[0], (*p4)[1], (*p4)[2], (*p4)[3]));
  CHECK_FALSE(find_induced_p4(complete(4)).has_value());
  CHECK_FALSE(find_induced_p4(cycle(4)).has_value());
  CHECK(find_induced_p4(cycle(5)).has_value());
  CHECK_FALSE(find_induced_p4(make(0, {})).has_value());

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 4 + trial % 27;
    const double p = 0.1 + 0.8 * static_cast<double>(trial % 10) / 10.0;
    Graph g = random_graph(n, p, rng);
    auto found = find_induced_p4(g);
    CHECK(found.has_value() == oracle::has_induced_p4(g));
    if (found) CHECK(oracle::is_induced_p4(g, (*found)[0], (*found)[1], (*found)[2], (*found)[3]));
  }
}

TEST_CASE("cograph_modulator") {
  CHECK(cograph_modulator(complete(4)).empty());
  CHECK(cograph_modulator(path(4)) == std::vector<Vertex>{0, 1, 2, 3});
  auto c5 = cograph_modulator(cycle(5));
  CHECK(c5.size() == 4);
  CHECK_FALSE(oracle::has_induced_p4(cycle(5), c5));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(8 + trial % 23, 0.3, rng);
    auto k = cograph_modulator(g);
    CHECK(k.size() % 4 == 0);
    CHECK(std::is_sorted(k.begin(), k.end()));
    CHECK_FALSE(oracle::has_induced_p4(g, k));
    CHECK(is_valid_modulator(g, {ModulatorKind::cograph_vertex_set, k, {}}));
  }
}

TEST_CASE("cograph_modulator_within stops at the limit") {
  Graph g = cycle(12);
  auto full = cograph_modulator(g);
  REQUIRE(full.size() >= 8);
  CHECK_FALSE(cograph_modulator_within(g, full.size() - 1).has_value());
  CHECK(cograph_modulator_within(g, full.size()) == full);
}

TEST_CASE("h_index and hub_set") {
  CHECK(h_index(star(5)) == 1);
  CHECK(hub_set(star(5)) == std::vector<Vertex>{0});
  CHECK(h_index(complete(4)) == 3);
  CHECK(hub_set(complete(4)) == std::vector<Vertex>{0, 1, 2});
  CHECK(h_index(make(3, {})) == 0);
  CHECK(hub_set(make(3, {})).empty());

  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(5 + trial % 40, 0.05 + 0.01 * (trial % 30), rng);
    const std::size_t h = h_index(g);
    CHECK(h == oracle::h_index(g));
    auto hubs = hub_set(g);
    CHECK(hubs.size() == h);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (!std::binary_search(hubs.begin(), hubs.end(), v)) CHECK(g.degree(v) <= h);
    CHECK(hub_set(g) == hubs);
  }
}

TEST_CASE("clique_modulator_2approx") {
  CHECK(clique_modulator_2approx(complete(5)).empty());
  Graph k5e = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(clique_modulator_2approx(k5e) == std::vector<Vertex>{3, 4});
  CHECK(oracle::min_clique_modulator(k5e) == 1);

  auto p4 = clique_modulator_2approx(path(4));
  CHECK(p4.size() <= 4);
  CHECK(is_clique_after_removal(path(4), p4));
  CHECK(oracle::min_clique_modulator(path(4)) == 2);

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(2 + trial % 11, 0.5 + 0.05 * (trial % 9), rng);
    auto k = clique_modulator_2approx(g);
    CHECK(is_clique_after_removal(g, k));
    CHECK(k.size() <= 2 * oracle::min_clique_modulator(g));
    CHECK(is_valid_modulator(g, {ModulatorKind::clique_vertex_set, k, {}}));
  }
}

TEST_CASE("degree_stats") {
  auto c5 = degree_stats(cycle(5));
  CHECK(c5.max == 2);
  CHECK(c5.min == 2);
  CHECK(c5.twice_edges == 10);
  CHECK(c5.vertices == 5);
  CHECK(c5.average() == doctest::Approx(2.0));
  auto s = degree_stats(star(5));
  CHECK(s.max == 5);
  CHECK(s.min == 1);
  CHECK(s.twice_edges == 10);
  CHECK(s.vertices == 6);

  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(10 + trial, 0.2, rng);
    auto d = degree_stats(g);
    std::size_t mx = 0, mn = g.num_vertices(), sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      mx = std::max(mx, g.degree(v));
      mn = std::min(mn, g.degree(v));
      sum += g.neighbors(v).size();
    }
    CHECK(d.max == mx);
    CHECK(d.min == mn);
    CHECK(d.twice_edges == sum);
  }
}

TEST_CASE("is_valid_modulator rejects broken promises") {
  Graph c6 = cycle(6);
  CHECK(is_valid_modulator(c6, {ModulatorKind::feedback_edge, {}, {{0, 1}}}));
  CHECK_FALSE(is_valid_modulator(c6, {ModulatorKind::feedback_edge, {}, {}}));
  CHECK_FALSE(is_valid_modulator(c6, {ModulatorKind::cograph_vertex_set, {0}, {}}));
  CHECK_FALSE(is_valid_modulator(c6, {ModulatorKind::clique_vertex_set, {0, 1}, {}}));
  CHECK(is_valid_modulator(c6, {ModulatorKind::clique_vertex_set, {0, 1, 2, 3}, {}}));
}

TEST_CASE("compute_parameters") {
  Graph g = gen_tree_plus_k(50, 4, 7);
  auto r = compute_parameters(g);
  CHECK(r.n == 50);
  CHECK(r.m == 53);
  CHECK(r.feedback_edge_number == 4);
  CHECK(r.h_index == h_index(g));
  CHECK(r.cograph_modulator_size == cograph_modulator(g).size());
  CHECK(r.clique_modulator_size == clique_modulator_2approx(g).size());
  CHECK_THROWS_AS(compute_parameters(make(2, {})), DisconnectedError);
}
