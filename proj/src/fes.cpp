#include "paramdiam/fes.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "paramdiam/errors.hpp"
#include "paramdiam/parallel.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam::fes {
namespace {

using Signed = std::int64_t;
constexpr Signed kNegInf = std::numeric_limits<Signed>::min() / 4;

// Max over first <= i < j <= last of w[i] + w[j] + min{j - i, length - (j - i)},
// i.e. the weighted diameter of positions first..last on a cycle of the given
// length. The near side (j - i <= length/2) is a sliding window whose maximum
// of w[i] - i is kept in a monotone deque; the far side is a prefix maximum of
// w[i] + i. kNegInf when fewer than two positions exist.
Signed max_pair_on_cycle(std::span<const Dist> w, std::size_t first, std::size_t last,
                         Signed length) {
  if (last <= first) return kNegInf;
  const Signed half = length / 2;
  Signed best = kNegInf;
  std::deque<std::size_t> window;
  Signed far_best = kNegInf;
  std::size_t far_next = first;
  auto near_key = [&](std::size_t i) { return static_cast<Signed>(w[i]) - static_cast<Signed>(i); };
  for (std::size_t j = first + 1; j <= last; ++j) {
    const Signed sj = static_cast<Signed>(j);
    while (!window.empty() && near_key(window.back()) <= near_key(j - 1)) window.pop_back();
    window.push_back(j - 1);
    while (!window.empty() && static_cast<Signed>(window.front()) < sj - half) window.pop_front();
    while (static_cast<Signed>(far_next) < sj - half) {
      far_best = std::max(far_best, static_cast<Signed>(w[far_next]) + static_cast<Signed>(far_next));
      ++far_next;
    }
    const Signed wj = static_cast<Signed>(w[j]);
    if (!window.empty()) best = std::max(best, near_key(window.front()) + sj + wj);
    if (far_best != kNegInf) best = std::max(best, far_best + length - sj + wj);
  }
  return best;
}

Dist clamp_candidate(Signed v) { return v <= 0 ? 0 : static_cast<Dist>(v); }

}  // namespace

ReductionState::ReductionState(WeightedDiameterInstance inst) : inst_(std::move(inst)) {
  const std::size_t n = inst_.graph.num_vertices();
  if (inst_.pen.size() != n) throw std::invalid_argument("pen must have one entry per vertex");
  live_adj_.resize(n);
  degree_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = inst_.graph.neighbors(v);
    live_adj_[v].assign(nb.begin(), nb.end());
    degree_[v] = nb.size();
  }
  alive_.assign(n, 1);
  alive_count_ = n;
}

std::span<const Vertex> ReductionState::neighbors(Vertex v) {
  auto& adj = live_adj_[v];
  if (adj.size() != degree_[v]) {
    std::erase_if(adj, [&](Vertex w) { return !alive_[w]; });
  }
  return adj;
}

bool ReductionState::adjacent(Vertex u, Vertex v) {
  if (degree_[u] > degree_[v]) std::swap(u, v);
  auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

void ReductionState::kill(Vertex v) {
  for (Vertex w : neighbors(v)) --degree_[w];
  alive_[v] = 0;
  degree_[v] = 0;
  live_adj_[v].clear();
  --alive_count_;
}

WeightedDiameterInstance ReductionState::snapshot(std::vector<Vertex>* to_original) const {
  std::vector<Vertex> keep;
  keep.reserve(alive_count_);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (alive_[v]) keep.push_back(v);
  }
  auto sub = induced_subgraph(inst_.graph, keep);
  WeightedDiameterInstance out;
  out.graph = std::move(sub.graph);
  out.pen.reserve(keep.size());
  for (Vertex v : keep) out.pen.push_back(inst_.pen[v]);
  out.s = inst_.s;
  if (to_original) *to_original = std::move(keep);
  return out;
}

RuleEvent apply_rr1(ReductionState& state, Vertex u) {
  if (u >= state.num_vertices() || !state.alive(u) || state.degree(u) != 1) {
    throw ContractViolation("degree-one rule applied to vertex " + std::to_string(u) +
                            " which is not an alive degree-one vertex");
  }
  const Vertex v = state.neighbors(u).front();
  auto& pen = state.inst_.pen;
  RuleEvent ev{Rule::degree_one, u, v, {}, state.inst_.s, 0, pen[v], 0};
  state.inst_.s = std::max(state.inst_.s, pen[u] + pen[v] + 1);
  pen[v] = std::max(pen[u] + 1, pen[v]);
  state.kill(u);
  ++state.rr1_count_;
  ev.s_after = state.inst_.s;
  ev.pen_after = pen[v];
  return ev;
}

RuleEvent apply_rr2(ReductionState& state, std::span<const Vertex> cycle) {
  const std::size_t a = cycle.size();
  auto violation = [](const std::string& why) {
    return ContractViolation("pending-cycle rule: " + why);
  };
  if (a < 3) throw violation("a cycle needs at least three vertices");
  for (Vertex x : cycle) {
    if (x >= state.num_vertices() || !state.alive(x)) throw violation("vertex not alive");
  }
  {
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw violation("repeated vertex");
    }
  }
  for (std::size_t i = 1; i < a; ++i) {
    if (state.degree(cycle[i]) != 2) throw violation("interior vertex without degree two");
    // Both neighbours of a degree-two interior vertex are its cycle neighbours.
    if (!state.adjacent(cycle[i], cycle[i - 1]) || !state.adjacent(cycle[i], cycle[(i + 1) % a])) {
      throw violation("consecutive vertices not adjacent");
    }
  }

  auto& pen = state.inst_.pen;
  std::vector<Dist> w(a);
  for (std::size_t i = 0; i < a; ++i) w[i] = pen[cycle[i]];

  const Vertex anchor = cycle[0];
  RuleEvent ev{Rule::pending_cycle, anchor, anchor, {cycle.begin(), cycle.end()},
               state.inst_.s, 0, pen[anchor], 0};

  const Signed inside = max_pair_on_cycle(w, 0, a - 1, static_cast<Signed>(a));
  state.inst_.s = std::max(state.inst_.s, clamp_candidate(inside));
  Dist reach = pen[anchor];
  for (std::size_t k = 1; k < a; ++k) reach = std::max(reach, w[k] + std::min(k, a - k));
  pen[anchor] = reach;

  for (std::size_t i = 1; i < a; ++i) state.kill(cycle[i]);
  ++state.rr2_count_;
  ev.s_after = state.inst_.s;
  ev.pen_after = pen[anchor];
  return ev;
}

void reduce_exhaustively(ReductionState& state, const RuleObserver& observer) {
  const std::size_t n = state.num_vertices();
  std::vector<Vertex> leaves;
  std::deque<Vertex> chain_seeds;
  std::vector<char> checked(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!state.alive(v)) continue;
    if (state.degree(v) == 1) leaves.push_back(v);
    if (state.degree(v) == 2) chain_seeds.push_back(v);
  }
  auto note_degree = [&](Vertex v) {
    if (state.degree(v) == 1) leaves.push_back(v);
    if (state.degree(v) == 2) chain_seeds.push_back(v);
  };
  auto emit = [&](const RuleEvent& ev) {
    if (observer) observer(ev);
  };
  auto other = [&](Vertex prev, Vertex cur) {
    auto nb = state.neighbors(cur);
    return nb[0] == prev ? nb[1] : nb[0];
  };

  std::vector<Vertex> left, right, cycle;
  for (;;) {
    while (!leaves.empty()) {
      Vertex u = leaves.back();
      leaves.pop_back();
      if (!state.alive(u) || state.degree(u) != 1) continue;
      auto ev = apply_rr1(state, u);
      note_degree(ev.target);
      emit(ev);
    }
    if (chain_seeds.empty()) break;
    Vertex x = chain_seeds.front();
    chain_seeds.pop_front();
    if (!state.alive(x) || state.degree(x) != 2 || checked[x]) continue;

    // Walk both ways along degree-two vertices.
    const auto nb = state.neighbors(x);
    const Vertex first_left = nb[0], first_right = nb[1];
    left.clear();
    Vertex prev = x, cur = first_left;
    while (cur != x && state.degree(cur) == 2) {
      left.push_back(cur);
      Vertex next = other(prev, cur);
      prev = cur;
      cur = next;
    }
    cycle.clear();
    if (cur == x) {
      // Pure cycle component: anchor at the smallest id.
      cycle.push_back(x);
      cycle.insert(cycle.end(), left.begin(), left.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      emit(apply_rr2(state, cycle));
      continue;
    }
    const Vertex left_end = cur;
    right.clear();
    prev = x;
    cur = first_right;
    while (state.degree(cur) == 2) {
      right.push_back(cur);
      Vertex next = other(prev, cur);
      prev = cur;
      cur = next;
    }
    const Vertex right_end = cur;
    if (left_end != right_end) {
      checked[x] = 1;
      for (Vertex v : left) checked[v] = 1;
      for (Vertex v : right) checked[v] = 1;
      continue;
    }
    cycle.push_back(left_end);
    cycle.insert(cycle.end(), left.rbegin(), left.rend());
    cycle.push_back(x);
    cycle.insert(cycle.end(), right.begin(), right.end());
    auto ev = apply_rr2(state, cycle);
    note_degree(ev.target);
    emit(ev);
  }
}

PathCycleDecomposition decompose(const Graph& g) {
  const std::size_t n = g.num_vertices();
  PathCycleDecomposition dec;
  std::vector<char> visited(n, 0);
  auto other = [&](Vertex prev, Vertex cur) {
    auto nb = g.neighbors(cur);
    return nb[0] == prev ? nb[1] : nb[0];
  };
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      throw ContractViolation("decompose: vertex " + std::to_string(v) + " has degree one");
    }
    if (g.degree(v) >= 3) dec.high.push_back(v);
  }

  std::vector<Vertex> seq;
  for (Vertex x0 : dec.high) {
    for (Vertex x1 : g.neighbors(x0)) {
      seq.assign({x0, x1});
      Vertex prev = x0, cur = x1;
      while (g.degree(cur) == 2) {
        visited[cur] = 1;
        Vertex next = other(prev, cur);
        prev = cur;
        cur = next;
        seq.push_back(cur);
      }
      const std::size_t a = seq.size() - 1;
      if (seq.back() == x0) {
        // Seen once per direction; keep the one leaving through the smaller neighbour.
        if (seq[1] < seq[a - 1]) dec.cycles.emplace_back(seq.begin(), seq.end() - 1);
      } else if (std::pair(seq[0], seq[1]) < std::pair(seq[a], seq[a - 1])) {
        dec.paths.push_back(seq);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (visited[v] || g.degree(v) != 2) continue;
    // Component that is a bare cycle; v is its smallest id.
    seq.assign({v});
    visited[v] = 1;
    Vertex prev = v, cur = g.neighbors(v)[0];
    while (cur != v) {
      visited[cur] = 1;
      seq.push_back(cur);
      Vertex next = other(prev, cur);
      prev = cur;
      cur = next;
    }
    dec.cycles.push_back(seq);
  }
  return dec;
}

Dist case1_high_bfs(const WeightedDiameterInstance& inst, std::span<const Vertex> high,
                    HighDistanceTable& table, unsigned threads) {
  const Graph& g = inst.graph;
  table.sources.assign(high.begin(), high.end());
  table.row_of.assign(g.num_vertices(), HighDistanceTable::kNoRow);
  table.rows.assign(high.size(), {});
  for (std::size_t i = 0; i < high.size(); ++i) table.row_of[high[i]] = static_cast<std::uint32_t>(i);

  std::vector<Dist> best(std::max(1u, threads), 0);
  std::vector<std::vector<Vertex>> queues(best.size());
  parallel_for(high.size(), threads, [&](unsigned w, std::size_t i) {
    const Vertex v = high[i];
    bfs_into(g, v, table.rows[i], queues[w]);
    const auto& dist = table.rows[i];
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (u != v) best[w] = std::max(best[w], inst.pen[v] + dist[u] + inst.pen[u]);
    }
  });
  return *std::max_element(best.begin(), best.end());
}

Dist case2_same_path(std::span<const Dist> pen, Dist endpoint_distance) {
  if (pen.size() < 4) return 0;  // fewer than two interior vertices
  const std::size_t a = pen.size() - 1;
  const Signed length = static_cast<Signed>(a) + static_cast<Signed>(endpoint_distance);
  return clamp_candidate(max_pair_on_cycle(pen, 1, a - 1, length));
}

Dist case3_path_pair(std::span<const Dist> pen1, std::span<const Dist> pen2,
                     const EndpointDistances& d) {
  if (pen1.size() < 3 || pen2.size() < 3) return 0;
  const Signed a = static_cast<Signed>(pen1.size()) - 1;
  const Signed b = static_cast<Signed>(pen2.size()) - 1;

  // For interior y_j: towards y0 the route length grows with j, towards yb it
  // shrinks. prefix[t] = max_{1<=j<=t} pen2[j] + j, suffix[t] = max_{t<=j<b} pen2[j] - j.
  std::vector<Signed> prefix(static_cast<std::size_t>(b) + 1, kNegInf);
  std::vector<Signed> suffix(static_cast<std::size_t>(b) + 1, kNegInf);
  for (Signed j = 1; j < b; ++j) {
    prefix[j] = std::max(prefix[j - 1], static_cast<Signed>(pen2[j]) + j);
  }
  for (Signed j = b - 1; j >= 1; --j) {
    suffix[j] = std::max(suffix[j + 1], static_cast<Signed>(pen2[j]) - j);
  }

  const auto x0_y0 = static_cast<Signed>(d.x0_y0), x0_yb = static_cast<Signed>(d.x0_yb);
  const auto xa_y0 = static_cast<Signed>(d.xa_y0), xa_yb = static_cast<Signed>(d.xa_yb);
  Signed best = kNegInf;
  for (Signed i = 1; i < a; ++i) {
    const Signed to_y0 = std::min(i + x0_y0, a - i + xa_y0);
    const Signed to_yb = std::min(i + x0_yb, a - i + xa_yb);
    // dist(x_i, y_j) = min{to_y0 + j, to_yb + b - j}; the first term wins for j <= t.
    const Signed diff = to_yb + b - to_y0;
    Signed t = diff >= 0 ? diff / 2 : -((-diff + 1) / 2);
    t = std::clamp<Signed>(t, 0, b - 1);
    Signed reach = kNegInf;
    if (t >= 1) reach = std::max(reach, to_y0 + prefix[t]);
    if (t + 1 <= b - 1) reach = std::max(reach, to_yb + b + suffix[t + 1]);
    best = std::max(best, static_cast<Signed>(pen1[i]) + reach);
  }
  return clamp_candidate(best);
}

std::vector<Dist> pen_along(const WeightedDiameterInstance& inst, std::span<const Vertex> seq) {
  std::vector<Dist> out;
  out.reserve(seq.size());
  for (Vertex v : seq) out.push_back(inst.pen[v]);
  return out;
}

Dist solve_fes(const Graph& g, const FesOptions& options, FesStats* stats) {
  if (!is_connected(g)) throw DisconnectedError();
  FesStats local;
  FesStats& st = stats ? *stats : local;
  st = {};
  if (g.num_vertices() <= 1) return 0;

  ReductionState state(WeightedDiameterInstance::unweighted(g));
  reduce_exhaustively(state, options.observer);
  st.degree_one_applications = state.degree_one_applications();
  st.pending_cycle_applications = state.pending_cycle_applications();

  const auto kernel = state.snapshot();
  st.kernel_vertices = kernel.graph.num_vertices();
  if (kernel.graph.num_vertices() == 1) return kernel.s;

  const auto dec = decompose(kernel.graph);
  if (!dec.cycles.empty()) throw std::logic_error("pending cycle survived reduction");
  st.high_vertices = dec.high.size();
  st.maximal_paths = dec.paths.size();
  st.bfs_runs = dec.high.size();

  HighDistanceTable table;
  Dist best = std::max(kernel.s, case1_high_bfs(kernel, dec.high, table, options.threads));

  std::vector<std::vector<Dist>> pens;
  pens.reserve(dec.paths.size());
  for (const auto& p : dec.paths) {
    pens.push_back(pen_along(kernel, p));
    best = std::max(best, case2_same_path(pens.back(), table.at(p.front(), p.back())));
  }
  for (std::size_t i = 0; i < dec.paths.size(); ++i) {
    const auto& p = dec.paths[i];
    if (p.size() < 3) continue;
    for (std::size_t j = i + 1; j < dec.paths.size(); ++j) {
      const auto& q = dec.paths[j];
      if (q.size() < 3) continue;
      EndpointDistances d{table.at(p.front(), q.front()), table.at(p.front(), q.back()),
                          table.at(p.back(), q.front()), table.at(p.back(), q.back())};
      best = std::max(best, case3_path_pair(pens[i], pens[j], d));
    }
  }
  return best;
}

}  // namespace paramdiam::fes
