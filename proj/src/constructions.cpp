#include "paramdiam/constructions.hpp"

#include <algorithm>
#include <cstdlib>

#include "paramdiam/errors.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam {
namespace {

std::string label(char prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

}  // namespace

std::string_view to_string(DiameterRelation r) {
  switch (r) {
    case DiameterRelation::plus_one: return "d+1";
    case DiameterRelation::plus_four: return "d+4";
    case DiameterRelation::five_iff_satisfiable: return "5 iff satisfiable";
  }
  return "?";
}

ConstructionOutput bipartite_girth_construction(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::vector<Edge> edges;
  edges.reserve(2 * g.num_edges() + n);
  for (const auto& [i, j] : g.edges()) {
    edges.push_back({i, n + j});
    edges.push_back({j, n + i});
  }
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, n + i});

  ConstructionOutput out{Graph::from_edge_list(edges, 2 * std::size_t{n}), DiameterRelation::plus_one,
                         {}, {}};
  out.roles.resize(2 * std::size_t{n});
  for (Vertex i = 0; i < n; ++i) {
    out.witnesses.side_a.push_back(i);
    out.witnesses.side_b.push_back(n + i);
    out.roles[i] = label('u', i);
    out.roles[n + i] = label('w', i);
  }
  return out;
}

ConstructionOutput bisection_construction(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  if (n == 0) throw std::invalid_argument("bisection construction needs at least one vertex");
  auto s = [](Vertex i) { return i; };
  auto t = [n](Vertex i) { return n + i; };
  auto u = [n](Vertex i) { return 2 * n + i; };
  auto w = [n](Vertex i) { return 3 * n + i; };

  std::vector<Edge> edges;
  edges.reserve(5 * std::size_t{n} + g.num_edges());
  for (Vertex i = 0; i < n; ++i) {
    edges.push_back({s(i), t(i)});
    edges.push_back({t(i), u(i)});
  }
  edges.push_back({u(0), w(0)});
  for (Vertex i = 1; i < 3 * n; ++i) edges.push_back({w(0), w(i)});
  for (const auto& [i, j] : g.edges()) edges.push_back({u(i), u(j)});

  ConstructionOutput out{Graph::from_edge_list(edges, 6 * std::size_t{n}), DiameterRelation::plus_four,
                         {}, {}};
  out.witnesses.cut_edge = Edge{u(0), w(0)};
  out.roles.resize(6 * std::size_t{n});
  for (Vertex i = 0; i < n; ++i) {
    out.witnesses.side_a.insert(out.witnesses.side_a.end(), {s(i), t(i), u(i)});
    out.roles[s(i)] = label('s', i);
    out.roles[t(i)] = label('t', i);
    out.roles[u(i)] = label('u', i);
  }
  for (Vertex i = 0; i < 3 * n; ++i) {
    out.witnesses.side_b.push_back(w(i));
    out.roles[w(i)] = label('w', i);
  }
  std::sort(out.witnesses.side_a.begin(), out.witnesses.side_a.end());
  return out;
}

ConstructionOutput sat_to_diameter(const CnfFormula& phi) {
  validate(phi);
  if (phi.clauses.empty()) throw ParseError("formula has no clauses");
  const std::size_t vars = phi.num_vars + (phi.num_vars % 2);
  const std::size_t half = vars / 2;
  if (half > 24) throw InfeasibleParameters("too many variables for the assignment gadget");
  const std::size_t per_side = std::size_t{1} << half;
  const std::size_t clauses = phi.clauses.size();

  // Layout: V1 | V2 | B | S1 | S2 | t1..t4; S1 and S2 are sized once known.
  const auto v1 = [](std::size_t i) { return static_cast<Vertex>(i); };
  const auto v2 = [&](std::size_t i) { return static_cast<Vertex>(per_side + i); };
  const auto b = [&](std::size_t j) { return static_cast<Vertex>(2 * per_side + j); };

  // Does assignment `bits` of a half (variables offset+1 .. offset+half) satisfy clause c?
  auto satisfies = [&](std::size_t bits, std::size_t offset, const std::vector<int>& c) {
    for (int lit : c) {
      auto var = static_cast<std::size_t>(std::abs(lit));
      if (var <= offset || var > offset + half) continue;
      bool value = (bits >> (var - offset - 1)) & 1U;
      if (value == (lit > 0)) return true;
    }
    return false;
  };

  struct Gadget {
    std::size_t assignment, clause;
  };
  std::vector<Gadget> s1, s2;
  for (std::size_t i = 0; i < per_side; ++i) {
    for (std::size_t j = 0; j < clauses; ++j) {
      if (!satisfies(i, 0, phi.clauses[j])) s1.push_back({i, j});
      if (!satisfies(i, half, phi.clauses[j])) s2.push_back({i, j});
    }
  }
  const std::size_t s1_base = 2 * per_side + clauses;
  const std::size_t s2_base = s1_base + s1.size();
  const std::size_t t_base = s2_base + s2.size();
  const std::size_t total = t_base + 4;
  const auto t = [&](int k) { return static_cast<Vertex>(t_base + static_cast<std::size_t>(k) - 1); };

  std::vector<Edge> edges;
  std::vector<std::string> roles(total);
  for (std::size_t i = 0; i < per_side; ++i) {
    edges.push_back({t(1), v1(i)});
    edges.push_back({t(4), v2(i)});
    roles[v1(i)] = label('v', i);
    roles[v2(i)] = label('w', i);
  }
  for (std::size_t j = 0; j < clauses; ++j) {
    edges.push_back({t(2), b(j)});
    edges.push_back({t(3), b(j)});
    roles[b(j)] = label('u', j);
  }
  for (std::size_t k = 0; k < s1.size(); ++k) {
    const auto x = static_cast<Vertex>(s1_base + k);
    edges.push_back({v1(s1[k].assignment), x});
    edges.push_back({b(s1[k].clause), x});
    edges.push_back({t(2), x});
    roles[x] = label('s', s1[k].assignment) + "_" + std::to_string(s1[k].clause + 1);
  }
  for (std::size_t k = 0; k < s2.size(); ++k) {
    const auto x = static_cast<Vertex>(s2_base + k);
    edges.push_back({v2(s2[k].assignment), x});
    edges.push_back({b(s2[k].clause), x});
    edges.push_back({t(3), x});
    roles[x] = label('q', s2[k].assignment) + "_" + std::to_string(s2[k].clause + 1);
  }
  edges.push_back({t(1), t(2)});
  edges.push_back({t(2), t(3)});
  edges.push_back({t(3), t(4)});
  for (int k = 1; k <= 4; ++k) roles[t(k)] = "t" + std::to_string(k);

  ConstructionOutput out{Graph::from_edge_list(edges, total), DiameterRelation::five_iff_satisfiable,
                         {}, std::move(roles)};
  out.witnesses.dominating_set = {t(1), t(2), t(3), t(4)};
  out.witnesses.assignment_vertices = 2 * per_side;
  out.witnesses.padded_variables = vars;
  return out;
}

bool check_witnesses(const ConstructionOutput& out) {
  const Graph& g = out.graph;
  const std::size_t n = g.num_vertices();
  const auto& wit = out.witnesses;
  if (out.roles.size() != n) return false;

  auto side_of = [&]() {
    std::vector<int> side(n, -1);
    for (Vertex v : wit.side_a) side[v] = 0;
    for (Vertex v : wit.side_b) side[v] = side[v] == -1 ? 1 : 2;
    return side;
  };

  switch (out.relation) {
    case DiameterRelation::plus_one: {
      auto side = side_of();
      if (std::any_of(side.begin(), side.end(), [](int s) { return s != 0 && s != 1; })) return false;
      for (const auto& [u, v] : g.edges()) {
        if (side[u] == side[v]) return false;
      }
      return true;
    }
    case DiameterRelation::plus_four: {
      if (!wit.cut_edge || wit.side_a.size() != wit.side_b.size()) return false;
      auto side = side_of();
      if (std::any_of(side.begin(), side.end(), [](int s) { return s != 0 && s != 1; })) return false;
      std::vector<Edge> kept;
      std::size_t crossing = 0;
      for (const auto& e : g.edges()) {
        if (side[e.u] != side[e.v]) {
          ++crossing;
          if (e != *wit.cut_edge && e != Edge{wit.cut_edge->v, wit.cut_edge->u}) return false;
        } else {
          kept.push_back(e);
        }
      }
      return crossing == 1 && connected_components(Graph::from_edge_list(kept, n)).count == 2;
    }
    case DiameterRelation::five_iff_satisfiable: {
      std::vector<char> covered(n, 0);
      for (Vertex d : wit.dominating_set) {
        covered[d] = 1;
        for (Vertex w : g.neighbors(d)) covered[w] = 1;
      }
      return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
    }
  }
  return false;
}

}  // namespace paramdiam
