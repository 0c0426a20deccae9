#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "paramdiam/errors.hpp"
#include "paramdiam/io.hpp"
#include "paramdiam/traversal.hpp"
#include "paramdiam/weighted.hpp"

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

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make(leaves + 1, e);
}

Graph fig1_input() { return make(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("from_edge_list builds sorted symmetric adjacency") {
  Graph g = make(2, {{0, 1}});
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.has_edge(1, 0));

  Graph h = make(5, {{3, 1}, {1, 0}, {4, 1}, {2, 1}});
  auto nb = h.neighbors(1);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 2, 3, 4});
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    degree_sum += h.degree(v);
    for (Vertex w : h.neighbors(v)) CHECK(h.has_edge(w, v));
  }
  CHECK(degree_sum == 2 * h.num_edges());
}

TEST_CASE("from_edge_list rejects invalid input with distinct errors") {
  CHECK_THROWS_AS(make(1, {{0, 0}}), SelfLoopError);
  CHECK_THROWS_AS(make(2, {{0, 1}, {1, 0}}), DuplicateEdgeError);
  CHECK_THROWS_AS(make(2, {{0, 2}}), VertexRangeError);
}

TEST_CASE("empty and single-vertex graphs") {
  Graph empty = make(0, {});
  CHECK(empty.num_vertices() == 0);
  Graph one = make(1, {});
  CHECK(naive_diameter(one) == 0);
  CHECK(is_connected(one));
}

TEST_CASE("bfs on small graphs") {
  CHECK(bfs(path(3), 0).dist == std::vector<Dist>{0, 1, 2});
  auto row = bfs(star(5), 0);
  for (Vertex v = 1; v <= 5; ++v) CHECK(row.dist[v] == 1);
  auto split = bfs(make(4, {{0, 1}, {2, 3}}), 0);
  CHECK(split.dist[2] == kUnreachable);
}

TEST_CASE("bfs agrees with relaxation APSP on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_connected(20, 0.1, rng);
    auto apsp = oracle::relaxation_apsp(g);
    for (Vertex s = 0; s < g.num_vertices(); ++s) CHECK(bfs(g, s).dist == apsp[s]);
  }
}

TEST_CASE("bfs row properties") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = oracle::random_connected(30, 0.08, rng);
    auto rows = bfs_rows(g, std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 1);
    for (const auto& r : rows) {
      CHECK(r.dist[r.source] == 0);
      for (const auto& [u, v] : g.edges()) CHECK((r.dist[u] > r.dist[v] ? r.dist[u] - r.dist[v] : r.dist[v] - r.dist[u]) <= 1);
    }
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < rows.size(); ++b) {
        CHECK(rows[a].dist[rows[b].source] == rows[b].dist[rows[a].source]);
        for (Vertex w = 0; w < g.num_vertices(); ++w)
          CHECK(rows[a].dist[w] <= rows[a].dist[rows[b].source] + rows[b].dist[w]);
      }
  }
}

TEST_CASE("parallel bfs_rows is identical to sequential") {
  std::mt19937_64 rng(13);
  Graph g = oracle::random_connected(200, 0.02, rng);
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  auto seq = bfs_rows(g, all, 1);
  auto par = bfs_rows(g, all, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].source == par[i].source);
    CHECK(seq[i].dist == par[i].dist);
  }
  CHECK(naive_diameter(g, 1) == naive_diameter(g, 4));
}

TEST_CASE("naive_diameter examples") {
  CHECK(naive_diameter(path(2)) == 1);
  CHECK(naive_diameter(fig1_input()) == 2);
  CHECK(naive_diameter(cycle(5)) == 2);
  CHECK_THROWS_AS(naive_diameter(make(4, {{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("naive_diameter equals an independent eccentricity loop") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_connected(5 + trial, 0.1, rng);
    CHECK(naive_diameter(g) == *oracle::diameter(g));
  }
}

TEST_CASE("weighted_diameter_oracle examples") {
  CHECK(weighted_diameter_oracle({path(2), {0, 0}, 0}) == 1);
  CHECK(weighted_diameter_oracle({path(3), {1, 0, 2}, 0}) == 5);
  CHECK(weighted_diameter_oracle({make(1, {}), {1}, 2}) == 2);
  CHECK(weighted_diameter_oracle({path(3), {0, 0, 0}, 9}) == 9);
  CHECK_THROWS_AS(weighted_diameter_oracle(WeightedDiameterInstance::unweighted(make(2, {}))), DisconnectedError);
}

TEST_CASE("weighted oracle with zero weights equals naive diameter") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_connected(15, 0.15, rng);
    CHECK(weighted_diameter_oracle(WeightedDiameterInstance::unweighted(g)) == naive_diameter(g));
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(path(2)).count == 1);
  auto two = connected_components(make(4, {{0, 1}, {2, 3}}));
  CHECK(two.count == 2);
  CHECK(two.label[0] == two.label[1]);
  CHECK(two.label[0] != two.label[2]);

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 40;
    std::vector<Edge> edges;
    oracle::UnionFind uf(n);
    for (int tries = 0; tries < 30; ++tries) {
      auto u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
      if (u != v && uf.unite(u, v)) edges.push_back({u, v});
    }
    Graph forest = make(n, edges);
    auto comps = connected_components(forest);
    CHECK(comps.count == n - forest.num_edges());
    CHECK(comps.count == uf.sets);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b) CHECK((comps.label[a] == comps.label[b]) == (uf.find(a) == uf.find(b)));
  }
}

TEST_CASE("is_bipartite and girth") {
  CHECK(is_bipartite(cycle(4)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(girth(make(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
  CHECK_FALSE(girth(path(6)).has_value());
  CHECK(girth(cycle(7)) == 7);
  CHECK(girth(fig1_input()) == 3);
}

TEST_CASE("induced subgraphs keep id maps") {
  Graph g = path(5);
  auto sub = remove_vertices(g, std::vector<Vertex>{2});
  CHECK(sub.graph.num_vertices() == 4);
  CHECK(sub.graph.num_edges() == 2);
  CHECK(sub.from_parent[2] == kNoVertex);
  for (Vertex i = 0; i < 4; ++i) CHECK(sub.from_parent[sub.to_parent[i]] == i);
}

TEST_CASE("edge list round trip and parse errors") {
  std::mt19937_64 rng(17);
  Graph g = oracle::random_connected(25, 0.1, rng);
  std::stringstream buf;
  write_edge_list(buf, g);
  Graph back = read_edge_list(buf);
  CHECK(back.edges() == g.edges());

  std::istringstream commented("# header\n3 2\n0 1\n# middle\n1 2\n");
  CHECK(read_edge_list(commented).num_edges() == 2);

  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 1\n"), SelfLoopError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n1 0\n"), DuplicateEdgeError);
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), VertexRangeError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("vertex lists") {
  std::istringstream in("# K\n4 1\n2\n");
  CHECK(read_vertex_list(in, 5) == std::vector<Vertex>{1, 2, 4});
  std::istringstream dup("1 1");
  CHECK_THROWS_AS(read_vertex_list(dup, 5), ParseError);
  std::istringstream range("7");
  CHECK_THROWS_AS(read_vertex_list(range, 5), VertexRangeError);
  std::istringstream empty("# nothing\n");
  CHECK(read_vertex_list(empty, 5).empty());
}
