#include "paramdiam/hindex.hpp"

#include <algorithm>
#include <map>

#include "paramdiam/errors.hpp"
#include "paramdiam/params.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam::hindex {
namespace {

// Scratch for repeated truncated BFS runs on the same graph.
struct Prober {
  const Graph& g;
  std::vector<Dist> dist;
  std::vector<Vertex> queue;

  explicit Prober(const Graph& graph) : g(graph), dist(graph.num_vertices(), kUnreachable) {}

  void run(Vertex v, Dist depth, std::span<const std::uint32_t> type_of,
           std::vector<std::size_t>& counts) {
    std::fill(counts.begin(), counts.end(), 0);
    queue.clear();
    queue.push_back(v);
    dist[v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      ++counts[type_of[u]];
      if (dist[u] == depth) continue;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex u : queue) dist[u] = kUnreachable;
  }
};

}  // namespace

std::vector<std::size_t> truncated_bfs_count(const Graph& g_minus_h, Vertex v, Dist depth,
                                             std::span<const std::uint32_t> type_of,
                                             std::size_t num_types) {
  Prober prober(g_minus_h);
  std::vector<std::size_t> counts(num_types);
  prober.run(v, depth, type_of, counts);
  return counts;
}

Dist solve_hd(const Graph& g, std::optional<std::vector<Vertex>> hubs, const HdOptions& options,
              HdStats* stats) {
  if (!is_connected(g)) throw DisconnectedError();
  HdStats local;
  HdStats& st = stats ? *stats : local;
  st = {};
  const std::size_t n = g.num_vertices();
  if (n <= 1) return 0;

  std::vector<Vertex> h = hubs ? std::move(*hubs) : hub_set(g);
  std::sort(h.begin(), h.end());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] >= n || (i > 0 && h[i] == h[i - 1])) {
      throw InvalidModulatorError("hub set lists an invalid or repeated vertex");
    }
  }
  st.hubs = h.size();

  // Phase 1: hub BFS rows and the type of every other vertex.
  const auto rows = bfs_rows(g, h, options.threads);
  Dist e = 0;
  for (const auto& row : rows) e = std::max(e, *std::max_element(row.dist.begin(), row.dist.end()));

  const auto rest = remove_vertices(g, h);
  const std::size_t r = rest.graph.num_vertices();
  HubTypes ht;
  ht.type_of.assign(r, HubTypes::kNoType);
  {
    std::map<HubTypeVector, std::uint32_t> index;
    HubTypeVector key(h.size());
    for (Vertex v = 0; v < r; ++v) {
      const Vertex pv = rest.to_parent[v];
      for (std::size_t i = 0; i < h.size(); ++i) key[i] = rows[i].dist[pv];
      auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(ht.types.size()));
      if (inserted) {
        ht.types.push_back(key);
        ht.totals.push_back(0);
      }
      ht.type_of[v] = it->second;
      ++ht.totals[it->second];
    }
  }
  st.types = ht.types.size();
  const std::size_t num_types = ht.types.size();

  // Phase 2: raise e until no vertex misses part of a type class within e.
  Prober prober(rest.graph);
  std::vector<std::size_t> counts(num_types);
  std::vector<std::size_t> unresolved;
  for (;;) {
    HdIteration it;
    it.e = e;
    for (Vertex v = 0; v < r && !it.shortfall_vertex; ++v) {
      const auto& own = ht.types[ht.type_of[v]];
      unresolved.clear();
      for (std::size_t t = 0; t < num_types; ++t) {
        Dist via_hub = kUnreachable;
        for (std::size_t i = 0; i < h.size(); ++i) {
          via_hub = std::min(via_hub, add_dist(own[i], ht.types[t][i]));
        }
        if (via_hub > e) unresolved.push_back(t);
      }
      if (unresolved.empty()) continue;
      prober.run(v, e, ht.type_of, counts);
      ++it.probes;
      for (std::size_t t : unresolved) {
        if (counts[t] < ht.totals[t]) {
          it.shortfall_vertex = rest.to_parent[v];
          it.shortfall_type = t;
          break;
        }
      }
    }
    ++st.iterations;
    st.probes += it.probes;
    if (options.trace) options.trace(it);
    if (!it.shortfall_vertex) return e;
    ++e;
  }
}

}  // namespace paramdiam::hindex
