#include "paramdiam/params.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "paramdiam/errors.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam {

std::vector<Edge> feedback_edge_set(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != n) throw DisconnectedError();

  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (parent[e.v] != e.u && parent[e.u] != e.v) out.push_back(e);
  }
  return out;
}

std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> in_nb(n, 0), in_nc(n, 0);
  std::uint32_t stamp = 0;
  std::vector<Vertex> far_side;

  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c : g.neighbors(b)) {
      if (c < b) continue;
      ++stamp;
      for (Vertex w : g.neighbors(b)) in_nb[w] = stamp;
      for (Vertex w : g.neighbors(c)) in_nc[w] = stamp;

      // D = N(c) \ N[b]
      far_side.clear();
      for (Vertex d : g.neighbors(c)) {
        if (d != b && in_nb[d] != stamp) far_side.push_back(d);
      }
      if (far_side.empty()) continue;

      for (Vertex a : g.neighbors(b)) {
        if (a == c || in_nc[a] == stamp) continue;
        std::size_t hits = 0;
        for (Vertex w : g.neighbors(a)) {
          if (w != b && in_nc[w] == stamp && in_nb[w] != stamp) ++hits;
        }
        if (hits == far_side.size()) continue;
        for (Vertex d : far_side) {
          if (!g.has_edge(a, d)) return std::array<Vertex, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> cograph_modulator_within(const Graph& g, std::size_t limit) {
  std::vector<Vertex> removed;
  for (;;) {
    auto rest = remove_vertices(g, removed);
    auto p4 = find_induced_p4(rest.graph);
    if (!p4) break;
    if (removed.size() + 4 > limit) return std::nullopt;
    for (Vertex v : *p4) removed.push_back(rest.to_parent[v]);
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

std::vector<Vertex> cograph_modulator(const Graph& g) {
  return *cograph_modulator_within(g, std::numeric_limits<std::size_t>::max());
}

std::size_t h_index(const Graph& g) {
  std::vector<std::size_t> deg(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  std::size_t h = 0;
  while (h < deg.size() && deg[h] >= h + 1) ++h;
  return h;
}

std::vector<Vertex> hub_set(const Graph& g) {
  const std::size_t h = h_index(g);
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.resize(h);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<Vertex> clique_modulator_2approx(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<char> alive(n, 1);
  // Doubly linked list of alive vertices in id order; index n is the sentinel.
  std::vector<std::size_t> next(n + 1), prev(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    next[i] = (i + 1) % (n + 1);
    prev[i] = (i + n) % (n + 1);
  }
  std::size_t remaining = n;
  auto erase = [&](Vertex v) {
    alive[v] = 0;
    next[prev[v]] = next[v];
    prev[next[v]] = prev[v];
    --remaining;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) --degree[w];
    }
  };

  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  std::vector<Vertex> deleted;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (degree[v] + 1 == remaining) {
      erase(v);  // universal: belongs to every maximum clique of what is left
      continue;
    }
    ++stamp;
    for (Vertex w : g.neighbors(v)) mark[w] = stamp;
    // At most degree[v] + 2 alive vertices are visited before a non-neighbour.
    std::size_t w = next[n];
    while (w == v || mark[w] == stamp) w = next[w];
    deleted.push_back(v);
    deleted.push_back(static_cast<Vertex>(w));
    erase(v);
    erase(static_cast<Vertex>(w));
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  st.vertices = g.num_vertices();
  st.twice_edges = 2 * g.num_edges();
  if (st.vertices == 0) return st;
  st.min = g.degree(0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    st.max = std::max(st.max, g.degree(v));
    st.min = std::min(st.min, g.degree(v));
  }
  return st;
}

bool is_clique_after_removal(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> drop(g.num_vertices(), 0);
  for (Vertex v : removed) drop[v] = 1;
  const std::size_t kept = g.num_vertices() - static_cast<std::size_t>(
                                                  std::count(drop.begin(), drop.end(), 1));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (drop[v]) continue;
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += drop[w] ? 0 : 1;
    if (inside + 1 != kept) return false;
  }
  return true;
}

bool is_valid_modulator(const Graph& g, const ModulatorResult& mod) {
  switch (mod.kind) {
    case ModulatorKind::feedback_edge: {
      std::vector<Edge> removed = mod.edges;
      for (auto& e : removed) {
        if (e.u > e.v) std::swap(e.u, e.v);
      }
      std::sort(removed.begin(), removed.end());
      std::vector<Edge> kept;
      for (const auto& e : g.edges()) {
        if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
      }
      if (kept.size() + removed.size() != g.num_edges()) return false;
      if (g.num_vertices() > 0 && kept.size() != g.num_vertices() - 1) return false;
      return is_connected(Graph::from_edge_list(kept, g.num_vertices()));
    }
    case ModulatorKind::cograph_vertex_set:
      return !find_induced_p4(remove_vertices(g, mod.vertices).graph).has_value();
    case ModulatorKind::clique_vertex_set:
      return is_clique_after_removal(g, mod.vertices);
  }
  return false;
}

ParameterReport compute_parameters(const Graph& g) {
  ParameterReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.feedback_edge_number = feedback_edge_set(g).size();
  r.cograph_modulator_size = cograph_modulator(g).size();
  r.clique_modulator_size = clique_modulator_2approx(g).size();
  r.h_index = h_index(g);
  r.degrees = degree_stats(g);
  return r;
}

}  // namespace paramdiam
