#include "paramdiam/deletion.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "paramdiam/errors.hpp"
#include "paramdiam/parallel.hpp"
#include "paramdiam/params.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam::deletion {

ApspMatrix::ApspMatrix(std::vector<Vertex> order)
    : order_(std::move(order)), dist_(order_.size() * order_.size(), kUnreachable) {}

Dist ApspMatrix::max_entry() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

ApspMatrix apsp_by_bfs(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  ApspMatrix m(std::move(order));
  std::vector<std::vector<Dist>> dist(std::max(1u, threads));
  std::vector<std::vector<Vertex>> queue(dist.size());
  parallel_for(n, threads, [&](unsigned w, std::size_t v) {
    bfs_into(g, static_cast<Vertex>(v), dist[w], queue[w]);
    for (std::size_t u = 0; u < n; ++u) m.set(v, u, dist[w][u]);
  });
  return m;
}

ApspMatrix clique_apsp(std::vector<Vertex> order) {
  ApspMatrix m(std::move(order));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m.set(i, j, i == j ? 0 : 1);
  }
  return m;
}

ApspMatrix combine_apsp(const Graph& g, std::span<const Vertex> k_set,
                        const ApspMatrix& apsp_without_k, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (apsp_without_k.size() + k_set.size() != n) {
    throw std::invalid_argument("base matrix must cover exactly the vertices outside K");
  }
  std::vector<std::uint32_t> base_index(n, static_cast<std::uint32_t>(-1));
  std::vector<char> in_k(n, 0);
  for (Vertex x : k_set) {
    if (x >= n || in_k[x]) throw InvalidModulatorError("deletion set lists an invalid or repeated vertex");
    in_k[x] = 1;
  }
  for (std::size_t i = 0; i < apsp_without_k.size(); ++i) {
    const Vertex v = apsp_without_k.order()[i];
    if (v >= n || in_k[v] || base_index[v] != static_cast<std::uint32_t>(-1)) {
      throw std::invalid_argument("base matrix must cover exactly the vertices outside K");
    }
    base_index[v] = static_cast<std::uint32_t>(i);
  }

  const auto rows = bfs_rows(g, k_set, threads);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  ApspMatrix out(std::move(order));

  parallel_for(n, threads, [&](unsigned, std::size_t a) {
    const auto ia = base_index[a];
    for (std::size_t c = 0; c < n; ++c) {
      const auto ic = base_index[c];
      Dist d = kUnreachable;
      if (ia != static_cast<std::uint32_t>(-1) && ic != static_cast<std::uint32_t>(-1)) {
        d = apsp_without_k.at(ia, ic);
      }
      for (const auto& row : rows) d = std::min(d, add_dist(row.dist[a], row.dist[c]));
      out.set(a, c, d);
    }
  });
  return out;
}

void write_apsp(std::ostream& out, const ApspMatrix& m) {
  const std::size_t n = m.size();
  out << "APSP " << n << '\n';
  std::array<char, 8> buf{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Dist d = m.at(i, j);
      for (std::size_t b = 0; b < 8; ++b) buf[b] = static_cast<char>((d >> (8 * b)) & 0xff);
      out.write(buf.data(), 8);
    }
  }
}

ApspMatrix read_apsp(std::istream& in) {
  std::string tag;
  std::size_t n = 0;
  if (!(in >> tag >> n) || tag != "APSP") throw ParseError("missing 'APSP n' header");
  if (in.get() != '\n') throw ParseError("APSP header must end with a newline");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  ApspMatrix m(std::move(order));
  std::array<char, 8> buf{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!in.read(buf.data(), 8)) throw ParseError("truncated APSP matrix");
      Dist d = 0;
      for (std::size_t b = 0; b < 8; ++b) {
        d |= static_cast<Dist>(static_cast<unsigned char>(buf[b])) << (8 * b);
      }
      m.set(i, j, d);
    }
  }
  return m;
}

Dist solve_clique_modulator(const Graph& g, std::optional<std::vector<Vertex>> k_set,
                            unsigned threads) {
  if (!is_connected(g)) throw DisconnectedError();
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> k = k_set ? std::move(*k_set) : clique_modulator_2approx(g);
  std::sort(k.begin(), k.end());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] >= n || (i > 0 && k[i] == k[i - 1])) {
      throw InvalidModulatorError("modulator lists an invalid or repeated vertex");
    }
  }
  if (!is_clique_after_removal(g, k)) throw InvalidModulatorError("G - K is not a clique");

  Dist best = n - k.size() >= 2 ? 1 : 0;
  for (const auto& row : bfs_rows(g, k, threads)) {
    best = std::max(best, *std::max_element(row.dist.begin(), row.dist.end()));
  }
  return best;
}

}  // namespace paramdiam::deletion
