#include "paramdiam/traversal.hpp"

#include <algorithm>

#include "paramdiam/errors.hpp"
#include "paramdiam/parallel.hpp"

namespace paramdiam {

void bfs_into(const Graph& g, Vertex source, std::vector<Dist>& dist, std::vector<Vertex>& queue) {
  dist.assign(g.num_vertices(), kUnreachable);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

DistanceRow bfs(const Graph& g, Vertex source) {
  DistanceRow row;
  row.source = source;
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  bfs_into(g, source, row.dist, queue);
  return row;
}

std::vector<DistanceRow> bfs_rows(const Graph& g, std::span<const Vertex> sources,
                                  unsigned threads) {
  std::vector<DistanceRow> rows(sources.size());
  parallel_for(sources.size(), threads, [&](unsigned, std::size_t i) {
    rows[i] = bfs(g, sources[i]);
  });
  return rows;
}

Dist naive_diameter(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return 0;
  if (!is_connected(g)) throw DisconnectedError();

  const unsigned workers = std::max(1u, threads);
  std::vector<Dist> best(workers, 0);
  std::vector<std::vector<Dist>> dist(workers);
  std::vector<std::vector<Vertex>> queue(workers);
  parallel_for(n, workers, [&](unsigned w, std::size_t v) {
    bfs_into(g, static_cast<Vertex>(v), dist[w], queue[w]);
    // BFS order is non-decreasing in distance, so the last vertex is furthest.
    best[w] = std::max(best[w], dist[w][queue[w].back()]);
  });
  return *std::max_element(best.begin(), best.end());
}

ComponentLabels connected_components(const Graph& g) {
  constexpr auto kUnlabelled = static_cast<std::uint32_t>(-1);
  ComponentLabels out;
  out.label.assign(g.num_vertices(), kUnlabelled);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (out.label[root] != kUnlabelled) continue;
    out.label[root] = out.count;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (out.label[w] == kUnlabelled) {
          out.label[w] = out.count;
          stack.push_back(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<Dist> girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Dist best = kUnreachable;
  std::vector<Dist> dist;
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    dist.assign(n, kUnreachable);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = kNoVertex;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

}  // namespace paramdiam
