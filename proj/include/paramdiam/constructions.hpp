#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paramdiam/cnf.hpp"
#include "paramdiam/graph.hpp"

namespace paramdiam {

// How the diameter of a construction relates to its input.
enum class DiameterRelation {
  plus_one,              // d(out) = d(in) + 1
  plus_four,             // d(out) = d(in) + 4
  five_iff_satisfiable,  // d(out) = 5 iff the formula is satisfiable, else < 5
};

std::string_view to_string(DiameterRelation r);

struct ConstructionWitnesses {
  // Bipartite doubling: the colour classes {u_i} and {w_i}.
  // Bisection gadget: the two 3n-vertex halves on either side of cut_edge.
  std::vector<Vertex> side_a, side_b;
  std::optional<Edge> cut_edge;
  // SAT gadget: t1..t4.
  std::vector<Vertex> dominating_set;
  std::size_t assignment_vertices = 0;  // |V1| + |V2|
  std::size_t padded_variables = 0;
};

struct ConstructionOutput {
  Graph graph;
  DiameterRelation relation;
  ConstructionWitnesses witnesses;
  std::vector<std::string> roles;  // one label per vertex, e.g. "u3", "s2_5", "t1"
};

// Vertices u_i = i and w_i = n + i; edges {u_i, w_j} and {u_j, w_i} for every
// input edge {v_i, v_j}, plus {u_i, w_i}. Bipartite, girth 4 when m >= 1,
// diameter d + 1.
ConstructionOutput bipartite_girth_construction(const Graph& g);

// s_i = i, t_i = n + i, u_i = 2n + i (i < n) and w_i = 3n + i (i < 3n).
// Paths s_i - t_i - u_i, a copy of the input on the u_i, and a star on the w_i
// centred at w_1 hanging off u_1. 6n vertices, 5n + m edges, minimum degree 1,
// one edge between two halves of 3n vertices, diameter d + 4.
ConstructionOutput bisection_construction(const Graph& g);

// CNF-SAT gadget with dominating set {t1, t2, t3, t4}: diameter 5 iff the
// formula is satisfiable, at most 5 always. Variables are padded to an even
// count; the first half forms W1 and the second W2. Assignment vertex i of a
// half sets the b-th variable of that half to bit b of i. Throws ParseError on
// an empty formula or empty clause, InfeasibleParameters above 48 variables.
ConstructionOutput sat_to_diameter(const CnfFormula& phi);

// Structural check of the witnesses recorded by the constructions above.
bool check_witnesses(const ConstructionOutput& out);

}  // namespace paramdiam
