#include "paramdiam/cograph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "paramdiam/errors.hpp"
#include "paramdiam/params.hpp"

namespace paramdiam::cograph {

std::vector<Dist> component_diameters(const Graph& g_minus_k, const ComponentLabels& comps,
                                      bool verify) {
  std::vector<std::size_t> size(comps.count, 0), twice_edges(comps.count, 0);
  for (Vertex v = 0; v < g_minus_k.num_vertices(); ++v) {
    ++size[comps.label[v]];
    twice_edges[comps.label[v]] += g_minus_k.degree(v);
  }
  std::vector<Dist> diam(comps.count);
  for (std::uint32_t c = 0; c < comps.count; ++c) {
    if (size[c] == 1) {
      diam[c] = 0;
    } else if (twice_edges[c] == size[c] * (size[c] - 1)) {
      diam[c] = 1;
    } else {
      diam[c] = 2;
    }
  }
  if (verify) {
    std::vector<Dist> dist;
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < g_minus_k.num_vertices(); ++v) {
      if (diam[comps.label[v]] != 2) continue;
      bfs_into(g_minus_k, v, dist, queue);
      if (dist[queue.back()] > 2) {
        throw InvalidModulatorError("component of G - K has diameter above two");
      }
    }
  }
  return diam;
}

std::vector<TypeRecord> build_types(const Graph& g, std::span<const Vertex> k_set,
                                    std::span<const DistanceRow> rows,
                                    std::span<const std::uint32_t> component_of) {
  std::vector<char> in_k(g.num_vertices(), 0);
  for (Vertex x : k_set) in_k[x] = 1;

  std::vector<TypeRecord> records;
  std::map<CappedTypeVector, std::size_t> index;
  CappedTypeVector key(k_set.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_k[v]) continue;
    for (std::size_t i = 0; i < k_set.size(); ++i) {
      key[i] = static_cast<std::uint8_t>(std::min<Dist>(rows[i].dist[v], 4));
    }
    auto [it, inserted] = index.try_emplace(key, records.size());
    if (inserted) {
      TypeRecord rec;
      rec.type = key;
      rec.component = component_of[v];
      records.push_back(std::move(rec));
    }
    TypeRecord& rec = records[it->second];
    ++rec.count;
    if (rec.num_representatives == 0 ||
        (rec.num_representatives == 1 && component_of[rec.representatives[0]] != component_of[v])) {
      rec.representatives[rec.num_representatives++] = v;
    }
    if (rec.component != component_of[v]) rec.component = TypeRecord::kMultiple;
  }
  return records;
}

Dist solve_cograph(const Graph& g, std::optional<std::vector<Vertex>> k_set,
                   const CographOptions& options, CographStats* stats) {
  if (!is_connected(g)) throw DisconnectedError();
  CographStats local;
  CographStats& st = stats ? *stats : local;
  st = {};
  if (g.num_vertices() <= 1) return 0;

  const bool supplied = k_set.has_value();
  std::vector<Vertex> k = supplied ? std::move(*k_set) : cograph_modulator(g);
  std::sort(k.begin(), k.end());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] >= g.num_vertices() || (i > 0 && k[i] == k[i - 1])) {
      throw InvalidModulatorError("modulator lists an invalid or repeated vertex");
    }
  }
  st.modulator_size = k.size();

  const auto rest = remove_vertices(g, k);
  if (supplied && options.verify_modulator && find_induced_p4(rest.graph)) {
    throw InvalidModulatorError("G - K contains an induced P4");
  }
  const auto comps = connected_components(rest.graph);
  st.components = comps.count;

  // (a) pairs inside one component of G - K.
  Dist best = 0;
  for (Dist d : component_diameters(rest.graph, comps)) best = std::max(best, d);

  // (b) pairs with an endpoint in K.
  const auto rows = bfs_rows(g, k, options.threads);
  for (const auto& row : rows) best = std::max(best, *std::max_element(row.dist.begin(), row.dist.end()));

  // (c) pairs in different components of G - K, one representative pair per type pair.
  std::vector<std::uint32_t> component_of(g.num_vertices(), TypeRecord::kMultiple);
  for (Vertex i = 0; i < rest.graph.num_vertices(); ++i) component_of[rest.to_parent[i]] = comps.label[i];
  const auto types = build_types(g, k, rows, component_of);
  st.types = types.size();

  auto through_k = [&](Vertex y, Vertex z) {
    Dist d = kUnreachable;
    for (const auto& row : rows) d = std::min(d, add_dist(row.dist[y], row.dist[z]));
    return d;
  };
  for (std::size_t p = 0; p < types.size(); ++p) {
    for (std::size_t q = p; q < types.size(); ++q) {
      const TypeRecord& tp = types[p];
      const TypeRecord& tq = types[q];
      Vertex y = kNoVertex, z = kNoVertex;
      for (std::size_t i = 0; i < tp.num_representatives && y == kNoVertex; ++i) {
        for (std::size_t j = 0; j < tq.num_representatives; ++j) {
          Vertex cy = tp.representatives[i], cz = tq.representatives[j];
          if (component_of[cy] != component_of[cz]) {
            y = cy;
            z = cz;
            break;
          }
        }
      }
      if (y == kNoVertex) continue;  // both types confined to one component
      ++st.type_pairs_evaluated;
      best = std::max(best, through_k(y, z));
    }
  }
  return best;
}

}  // namespace paramdiam::cograph
