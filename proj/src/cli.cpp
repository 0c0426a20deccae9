#include "paramdiam/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <ostream>

#include "paramdiam/cograph.hpp"
#include "paramdiam/constructions.hpp"
#include "paramdiam/deletion.hpp"
#include "paramdiam/errors.hpp"
#include "paramdiam/fes.hpp"
#include "paramdiam/generators.hpp"
#include "paramdiam/hindex.hpp"
#include "paramdiam/io.hpp"
#include "paramdiam/params.hpp"
#include "paramdiam/traversal.hpp"

namespace paramdiam::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxDenseOrder = 16384;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

unsigned threads_from_env() {
  const char* env = std::getenv("PARAMDIAM_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  unsigned value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    throw std::invalid_argument("PARAMDIAM_THREADS must be a positive integer");
  return value;
}

json degree_json(const DegreeStats& d) {
  std::size_t g = std::gcd(d.twice_edges, d.vertices);
  if (g == 0) g = 1;
  return {{"numerator", d.twice_edges / g}, {"denominator", d.vertices / g}, {"value", d.average()}};
}

json to_json(const ParameterReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"feedback_edge_number", r.feedback_edge_number},
          {"cograph_modulator_size", r.cograph_modulator_size},
          {"clique_modulator_size", r.clique_modulator_size},
          {"h_index", r.h_index},
          {"max_degree", r.degrees.max},
          {"min_degree", r.degrees.min},
          {"average_degree", degree_json(r.degrees)}};
}

json to_json(const fes::RuleEvent& e) {
  json j = {{"event", "rule"},
            {"rule", e.rule == fes::Rule::degree_one ? "degree_one" : "pending_cycle"},
            {"vertex", e.vertex},
            {"target", e.target},
            {"s_before", e.s_before},
            {"s_after", e.s_after},
            {"pen_before", e.pen_before},
            {"pen_after", e.pen_after}};
  if (e.rule == fes::Rule::pending_cycle) j["cycle"] = e.cycle;
  return j;
}

json to_json(const hindex::HdIteration& it) {
  json j = {{"event", "iteration"}, {"e", it.e}, {"probes", it.probes}};
  j["shortfall_vertex"] = it.shortfall_vertex ? json(*it.shortfall_vertex) : json(nullptr);
  j["shortfall_type"] = it.shortfall_type ? json(*it.shortfall_type) : json(nullptr);
  return j;
}

std::size_t feedback_edge_number(const Graph& g) { return g.num_edges() + 1 - g.num_vertices(); }

// ---------------------------------------------------------------- solve

struct SolveConfig {
  std::string algo = "auto";
  std::optional<std::vector<Vertex>> modulator;
  bool trace = false;
  unsigned threads = 1;
  std::size_t cograph_threshold = 8;
  std::size_t hindex_threshold = 16;
  std::string apsp_out;
};

struct Outcome {
  std::string algo;
  Dist diameter = 0;
  json parameters = json::object();
};

Outcome run_deletion(const Graph& g, const SolveConfig& cfg) {
  if (!is_connected(g)) throw DisconnectedError();
  std::vector<Vertex> k = cfg.modulator ? *cfg.modulator : clique_modulator_2approx(g);
  if (!is_clique_after_removal(g, k)) throw InvalidModulatorError("G - K is not a clique");
  if (g.num_vertices() > kMaxDenseOrder)
    throw InfeasibleParameters("dense APSP limited to " + std::to_string(kMaxDenseOrder) + " vertices");
  std::vector<char> in_k(g.num_vertices(), 0);
  for (Vertex v : k) in_k[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!in_k[v]) rest.push_back(v);
  auto matrix = deletion::combine_apsp(g, k, deletion::clique_apsp(std::move(rest)), cfg.threads);
  if (!cfg.apsp_out.empty()) {
    std::ofstream file(cfg.apsp_out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + cfg.apsp_out);
    deletion::write_apsp(file, matrix);
  }
  return {"deletion", matrix.max_entry(), {{"modulator_size", k.size()}}};
}

Outcome dispatch(const Graph& g, const SolveConfig& cfg, std::ostream& err) {
  const std::string& algo = cfg.algo;
  if (cfg.modulator && (algo == "naive" || algo == "fes" || algo == "auto"))
    throw std::invalid_argument("--modulator is not used by --algo " + algo);

  if (algo == "naive") return {"naive", naive_diameter(g, cfg.threads), json::object()};

  if (algo == "fes") {
    fes::FesOptions opts;
    opts.threads = cfg.threads;
    if (cfg.trace) opts.observer = [&err](const fes::RuleEvent& e) { err << to_json(e).dump() << '\n'; };
    fes::FesStats stats;
    Dist d = fes::solve_fes(g, opts, &stats);
    return {"fes", d,
            {{"feedback_edge_number", feedback_edge_number(g)},
             {"degree_one_applications", stats.degree_one_applications},
             {"pending_cycle_applications", stats.pending_cycle_applications},
             {"kernel_vertices", stats.kernel_vertices},
             {"high_vertices", stats.high_vertices},
             {"maximal_paths", stats.maximal_paths}}};
  }

  if (algo == "cograph") {
    cograph::CographStats stats;
    Dist d = cograph::solve_cograph(g, cfg.modulator, {cfg.threads, true}, &stats);
    return {"cograph", d,
            {{"modulator_size", stats.modulator_size}, {"components", stats.components}, {"types", stats.types}}};
  }

  if (algo == "hindex-diam") {
    hindex::HdOptions opts;
    opts.threads = cfg.threads;
    if (cfg.trace) opts.trace = [&err](const hindex::HdIteration& it) { err << to_json(it).dump() << '\n'; };
    hindex::HdStats stats;
    Dist d = hindex::solve_hd(g, cfg.modulator, opts, &stats);
    return {"hindex-diam", d,
            {{"hubs", stats.hubs}, {"types", stats.types}, {"iterations", stats.iterations}, {"probes", stats.probes}}};
  }

  if (algo == "clique") {
    std::vector<Vertex> k = cfg.modulator ? *cfg.modulator : clique_modulator_2approx(g);
    std::size_t size = k.size();
    Dist d = deletion::solve_clique_modulator(g, std::move(k), cfg.threads);
    return {"clique", d, {{"modulator_size", size}}};
  }

  if (algo == "deletion") return run_deletion(g, cfg);

  if (algo == "auto") {
    if (!is_connected(g)) throw DisconnectedError();
    const std::size_t k = feedback_edge_number(g);
    const std::size_t h = h_index(g);
    const std::size_t clique_size = clique_modulator_2approx(g).size();
    auto cograph_k = cograph_modulator_within(g, std::max(k, cfg.cograph_threshold));
    json selection = {{"feedback_edge_number", k},
                      {"h_index", h},
                      {"clique_modulator_size", clique_size},
                      {"cograph_modulator_size", cograph_k ? json(cograph_k->size()) : json(nullptr)}};

    SolveConfig next = cfg;
    if (k <= h && k <= clique_size && (!cograph_k || k <= cograph_k->size())) {
      next.algo = "fes";
    } else if (cograph_k && cograph_k->size() <= cfg.cograph_threshold) {
      next.algo = "cograph";
      next.modulator = std::move(cograph_k);
    } else if (h <= cfg.hindex_threshold) {
      next.algo = "hindex-diam";
    } else {
      next.algo = "naive";
    }
    Outcome o = dispatch(g, next, err);
    o.parameters["selection"] = selection;
    return o;
  }
  throw std::invalid_argument("unknown algorithm " + algo);
}

// ---------------------------------------------------------------- generate

struct GenerateConfig {
  std::string kind;
  std::uint64_t seed = 0;
  std::string out;
  std::string input;
  std::string cnf;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t extra = 0;
  double p = 0.0;
};

json witnesses_json(const ConstructionOutput& c) {
  const auto& w = c.witnesses;
  json j = json::object();
  switch (c.relation) {
    case DiameterRelation::plus_one:
      j["bipartition"] = {w.side_a, w.side_b};
      break;
    case DiameterRelation::plus_four:
      j["cut_edge"] = {w.cut_edge->u, w.cut_edge->v};
      j["sides"] = {w.side_a, w.side_b};
      break;
    case DiameterRelation::five_iff_satisfiable:
      j["dominating_set"] = w.dominating_set;
      j["assignment_vertices"] = w.assignment_vertices;
      j["padded_variables"] = w.padded_variables;
      break;
  }
  return j;
}

Graph connected_input(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--input is required for this generator");
  Graph g = read_edge_list_file(path);
  if (g.num_vertices() == 0) throw ParseError("input graph has no vertices");
  if (!is_connected(g)) throw DisconnectedError();
  return g;
}

int cmd_generate(const GenerateConfig& cfg, std::ostream& out) {
  json sidecar = {{"generator", cfg.kind}, {"seed", cfg.seed}};
  std::optional<Graph> graph;

  if (cfg.kind == "thm1" || cfg.kind == "thm4" || cfg.kind == "thm6") {
    ConstructionOutput c = [&] {
      if (cfg.kind == "thm6") {
        if (cfg.cnf.empty()) throw std::invalid_argument("--cnf is required for thm6");
        sidecar["source"] = cfg.cnf;
        return sat_to_diameter(read_dimacs_file(cfg.cnf));
      }
      Graph in = connected_input(cfg.input);
      sidecar["source"] = cfg.input;
      sidecar["input_n"] = in.num_vertices();
      sidecar["input_m"] = in.num_edges();
      return cfg.kind == "thm1" ? bipartite_girth_construction(in) : bisection_construction(in);
    }();
    sidecar["relation"] = to_string(c.relation);
    sidecar["witnesses"] = witnesses_json(c);
    sidecar["roles"] = c.roles;
    graph = std::move(c.graph);
  } else if (cfg.kind == "tree-plus-k") {
    graph = gen_tree_plus_k(cfg.n, cfg.k, cfg.seed);
    sidecar["parameters"] = {{"n", cfg.n}, {"k", cfg.k}};
  } else if (cfg.kind == "cograph-plus") {
    graph = gen_random_cograph_plus(cfg.n, cfg.extra, cfg.seed);
    sidecar["parameters"] = {{"n", cfg.n}, {"extra", cfg.extra}};
  } else if (cfg.kind == "er") {
    graph = gen_connected_er(cfg.n, cfg.p, cfg.seed);
    sidecar["parameters"] = {{"n", cfg.n}, {"p", cfg.p}};
  } else {
    throw std::invalid_argument("unknown generator " + cfg.kind);
  }

  sidecar["n"] = graph->num_vertices();
  sidecar["m"] = graph->num_edges();
  write_edge_list_file(cfg.out, *graph);
  const std::string sidecar_path = cfg.out + ".json";
  std::ofstream file(sidecar_path);
  if (!file) throw std::runtime_error("cannot write " + sidecar_path);
  file << sidecar.dump(2) << '\n';
  out << json{{"graph", cfg.out}, {"sidecar", sidecar_path}, {"n", graph->num_vertices()},
              {"m", graph->num_edges()}}
             .dump()
      << '\n';
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchConfig {
  std::string family;
  std::vector<std::size_t> sizes;
  std::size_t repeats = 3;
  std::vector<std::string> algos;
  std::optional<double> param;
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
};

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> algos = cfg.algos;
  double param = 0;
  if (cfg.family == "tree-plus-k") {
    param = cfg.param.value_or(20);
    if (algos.empty()) algos = {"fes", "naive"};
  } else if (cfg.family == "cograph-plus") {
    param = cfg.param.value_or(3);
    if (algos.empty()) algos = {"cograph", "naive"};
  } else if (cfg.family == "er") {
    param = cfg.param.value_or(12);
    if (algos.empty()) algos = {"hindex-diam", "naive"};
  } else {
    throw std::invalid_argument("unknown bench family " + cfg.family);
  }
  if (cfg.repeats == 0) throw std::invalid_argument("--repeats must be positive");

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot write " + cfg.out);
  }
  std::ostream& csv = cfg.out.empty() ? out : file;
  csv << "n,m,param,algo,ms\n";

  bool agree = true;
  for (std::size_t n : cfg.sizes) {
    const std::uint64_t seed = cfg.seed + n;
    Graph g = [&] {
      if (cfg.family == "tree-plus-k") return gen_tree_plus_k(n, static_cast<std::size_t>(param), seed);
      if (cfg.family == "cograph-plus") return gen_random_cograph_plus(n, static_cast<std::size_t>(param), seed);
      return gen_connected_er(n, n > 1 ? std::min(1.0, param / static_cast<double>(n - 1)) : 0.0, seed);
    }();
    std::optional<Dist> reference;
    for (const auto& algo : algos) {
      SolveConfig sc;
      sc.algo = algo;
      sc.threads = cfg.threads;
      std::vector<double> times;
      for (std::size_t r = 0; r < cfg.repeats; ++r) {
        auto start = Clock::now();
        Outcome o = dispatch(g, sc, err);
        times.push_back(elapsed_ms(start));
        if (!reference) reference = o.diameter;
        if (o.diameter != *reference) {
          err << "bench: " << algo << " reported " << o.diameter << ", expected " << *reference << " at n=" << n
              << '\n';
          agree = false;
        }
      }
      std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
      csv << g.num_vertices() << ',' << g.num_edges() << ',' << param << ',' << algo << ','
          << times[times.size() / 2] << '\n';
    }
  }
  return agree ? kOk : kVerifyMismatch;
}

// ---------------------------------------------------------------- verify-apsp

int cmd_verify_apsp(const std::string& graph_path, const std::string& matrix_path, unsigned threads,
                    std::ostream& out) {
  Graph g = read_edge_list_file(graph_path);
  std::ifstream file(matrix_path, std::ios::binary);
  if (!file) throw ParseError("cannot open " + matrix_path);
  auto got = deletion::read_apsp(file);
  if (g.num_vertices() > kMaxDenseOrder)
    throw InfeasibleParameters("dense APSP limited to " + std::to_string(kMaxDenseOrder) + " vertices");
  auto expected = deletion::apsp_by_bfs(g, threads);
  json report = {{"graph", graph_path}, {"matrix", matrix_path}, {"n", g.num_vertices()}};
  if (got.size() != expected.size()) {
    report["verdict"] = "mismatch";
    report["reason"] = "matrix order " + std::to_string(got.size()) + " differs from n";
    out << report.dump() << '\n';
    return kVerifyMismatch;
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    for (std::size_t j = 0; j < got.size(); ++j) {
      if (got.at(i, j) != expected.at(i, j)) {
        report["verdict"] = "mismatch";
        report["first_difference"] = {{"row", i}, {"col", j}, {"expected", expected.at(i, j)}, {"got", got.at(i, j)}};
        out << report.dump() << '\n';
        return kVerifyMismatch;
      }
    }
  }
  report["verdict"] = "match";
  out << report.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph diameter via structural parameters", "paramdiam"};
  app.require_subcommand(1);
  unsigned threads = 0;

  std::string params_path;
  auto* params = app.add_subcommand("params", "Report structural parameters as JSON");
  params->add_option("graph", params_path, "Edge-list file")->required();

  std::string solve_path, modulator_path;
  bool verify = false;
  SolveConfig solve_cfg;
  auto* solve = app.add_subcommand("solve", "Compute the diameter and print a JSON run report");
  solve->add_option("graph", solve_path, "Edge-list file")->required();
  solve->add_option("--algo", solve_cfg.algo, "Solver")
      ->check(CLI::IsMember({"auto", "naive", "fes", "cograph", "hindex-diam", "clique", "deletion"}));
  solve->add_option("--modulator", modulator_path, "Vertex-id file: modulator, hub set or clique deletion set");
  solve->add_flag("--verify", verify, "Compare against the BFS-from-every-vertex diameter");
  solve->add_flag("--trace", solve_cfg.trace, "Emit JSON lines for rule applications and iterations on stderr");
  solve->add_option("--threads", threads, "Worker threads (default: PARAMDIAM_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--cograph-threshold", solve_cfg.cograph_threshold, "auto: largest cograph modulator used");
  solve->add_option("--hindex-threshold", solve_cfg.hindex_threshold, "auto: largest h-index used");
  solve->add_option("--apsp-out", solve_cfg.apsp_out, "deletion: write the combined distance matrix here");

  GenerateConfig gen_cfg;
  auto* generate = app.add_subcommand("generate", "Write a generated graph and its JSON sidecar");
  generate->add_option("kind", gen_cfg.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm4", "thm6", "tree-plus-k", "cograph-plus", "er"}));
  generate->add_option("--seed", gen_cfg.seed, "Random seed")->required();
  generate->add_option("--out", gen_cfg.out, "Edge-list output path; the sidecar gets a .json suffix")->required();
  generate->add_option("--input", gen_cfg.input, "thm1/thm4: input edge list");
  generate->add_option("--cnf", gen_cfg.cnf, "thm6: DIMACS CNF input");
  generate->add_option("--n", gen_cfg.n, "Vertex count");
  generate->add_option("--k", gen_cfg.k, "tree-plus-k: extra edges");
  generate->add_option("--extra", gen_cfg.extra, "cograph-plus: attached vertices");
  generate->add_option("--p", gen_cfg.p, "er: edge probability");

  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "Time solvers on generated families; CSV output");
  bench->add_option("--family", bench_cfg.family, "tree-plus-k, cograph-plus or er")
      ->required()
      ->check(CLI::IsMember({"tree-plus-k", "cograph-plus", "er"}));
  bench->add_option("--sizes", bench_cfg.sizes, "Comma separated vertex counts")->required()->delimiter(',');
  bench->add_option("--repeats", bench_cfg.repeats, "Runs per size and solver; the median is reported");
  bench->add_option("--algos", bench_cfg.algos, "Comma separated solvers")->delimiter(',');
  bench->add_option("--param", bench_cfg.param, "Family parameter: k, extra vertices, or expected degree");
  bench->add_option("--seed", bench_cfg.seed, "Base seed; size n uses seed + n")->required();
  bench->add_option("--out", bench_cfg.out, "CSV path (default: stdout)");
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string apsp_graph, apsp_matrix;
  auto* verify_apsp = app.add_subcommand("verify-apsp", "Check a binary distance matrix against BFS");
  verify_apsp->add_option("graph", apsp_graph, "Edge-list file")->required();
  verify_apsp->add_option("matrix", apsp_matrix, "Matrix file")->required();
  verify_apsp->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"paramdiam"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kOther;
  }

  try {
    if (threads == 0) threads = threads_from_env();

    if (*params) {
      Graph g = read_edge_list_file(params_path);
      out << to_json(compute_parameters(g)).dump(2) << '\n';
      return kOk;
    }

    if (*solve) {
      Graph g = read_edge_list_file(solve_path);
      solve_cfg.threads = threads;
      if (!modulator_path.empty()) solve_cfg.modulator = read_vertex_list_file(modulator_path, g.num_vertices());
      if (!solve_cfg.apsp_out.empty() && solve_cfg.algo != "deletion")
        throw std::invalid_argument("--apsp-out requires --algo deletion");

      auto start = Clock::now();
      Outcome o = dispatch(g, solve_cfg, err);
      double ms = elapsed_ms(start);
      json report = {{"input", solve_path},
                     {"requested", solve_cfg.algo},
                     {"algorithm", o.algo},
                     {"n", g.num_vertices()},
                     {"m", g.num_edges()},
                     {"diameter", o.diameter},
                     {"parameters", o.parameters},
                     {"threads", threads},
                     {"ms", ms}};
      int code = kOk;
      if (verify) {
        Dist expected = naive_diameter(g, threads);
        if (expected == o.diameter) {
          report["verify"] = {{"verdict", "match"}};
        } else {
          report["verify"] = {{"verdict", "mismatch"}, {"expected", expected}, {"got", o.diameter}};
          code = kVerifyMismatch;
        }
      }
      out << report.dump(2) << '\n';
      return code;
    }

    if (*generate) return cmd_generate(gen_cfg, out);

    if (*bench) {
      bench_cfg.threads = threads;
      return cmd_bench(bench_cfg, out, err);
    }

    if (*verify_apsp) return cmd_verify_apsp(apsp_graph, apsp_matrix, threads, out);
  } catch (const InvalidModulatorError& e) {
    err << "error: invalid modulator: " << e.what() << '\n';
    return kInvalidModulator;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}

}  // namespace paramdiam::cli
