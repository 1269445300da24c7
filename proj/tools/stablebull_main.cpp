#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stablebull/bench.hpp"
#include "stablebull/detect.hpp"
#include "stablebull/generate.hpp"
#include "stablebull/graph.hpp"
#include "stablebull/io.hpp"
#include "stablebull/modular.hpp"
#include "stablebull/solver.hpp"
#include "stablebull/structure.hpp"

namespace sb = stablebull;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit codes: 0 success, 1 class violation (a certificate was printed),
// 2 usage/input/resource errors

void print_violation(const sb::Violation& v, bool json) {
  if (json) {
    ordered_json doc;
    doc["in_class"] = false;
    doc["violation"] = sb::violation_to_json(v);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << v.to_text() << "\n";
  }
}

void print_solution(const sb::Graph& g, const sb::StableSetSolution& sol, bool json,
                    const sb::SolveTrace* trace) {
  if (json) {
    ordered_json doc;
    doc["solution"] = sb::solution_to_json(sol, g);
    if (trace != nullptr) doc["trace"] = sb::trace_to_json(*trace);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "weight: " << sol.weight << "\n";
  std::cout << "size: " << sol.vertices.count() << "\n";
  std::cout << "vertices:";
  for (sb::Vertex v = sol.vertices.first(); v != -1; v = sol.vertices.next(v))
    std::cout << ' ' << v;
  std::cout << "\n";
  if (g.has_labels()) {
    std::cout << "labels:";
    for (sb::Vertex v = sol.vertices.first(); v != -1; v = sol.vertices.next(v))
      std::cout << ' ' << g.label(v);
    std::cout << "\n";
  }
}

int run_check(const std::string& path, bool json) {
  const sb::Graph g = sb::load_graph(path);
  if (const auto bull = sb::find_bull(g); bull.has_value()) {
    print_violation(sb::Violation{sb::ViolationKind::bull_found,
                                  {bull->a, bull->b, bull->c, bull->d, bull->e},
                                  "input contains an induced bull"},
                    json);
    return 1;
  }
  if (const auto p6 = sb::find_induced_path6(g); p6.has_value()) {
    print_violation(sb::Violation{sb::ViolationKind::p6_found, p6->vertices,
                                  "input contains an induced six-vertex path"},
                    json);
    return 1;
  }
  if (json) {
    ordered_json doc;
    doc["in_class"] = true;
    doc["n"] = g.size();
    doc["m"] = g.edge_count();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "in class: no induced six-vertex path, no induced bull\n";
  }
  return 0;
}

struct SolveArgs {
  std::string path;
  std::string weights_path;
  std::string class_check = "auto";
  bool json = false;
  bool trace = false;
  bool oracle_verify = false;
  bool force = false;
  bool parallel = false;
  std::uint64_t budget = 0;
};

int run_solve(const SolveArgs& a) {
  sb::Graph g = sb::load_graph(a.path);
  if (!a.weights_path.empty()) g = g.with_weights(sb::load_weights(a.weights_path, g.size()));

  sb::SolveOptions opts;
  if (a.class_check == "always") {
    opts.class_check = sb::SolveOptions::ClassCheck::always;
  } else if (a.class_check == "never") {
    opts.class_check = sb::SolveOptions::ClassCheck::never;
  }
  opts.parallel = a.parallel;
  opts.node_budget = a.budget;

  sb::SolveTrace trace;
  sb::StableSetSolution sol;
  try {
    sol = sb::mwss(g, opts, a.trace ? &trace : nullptr);
  } catch (const sb::ClassViolationError& e) {
    print_violation(e.violation(), a.json);
    return 1;
  }

  if (a.oracle_verify) {
    if (g.size() > 20 && !a.force) {
      std::cerr << "oracle verification refuses n > 20 without --force\n";
      return 2;
    }
    const sb::StableSetSolution reference = sb::mwss_exhaustive(g);
    if (reference.weight != sol.weight) {
      std::cerr << "oracle mismatch: solver found " << sol.weight << ", enumeration found "
                << reference.weight << "\n";
      return 2;
    }
  }

  print_solution(g, sol, a.json, a.trace ? &trace : nullptr);
  return 0;
}

int run_decompose(const std::string& path, bool json) {
  const sb::Graph g = sb::load_graph(path);
  if (g.size() == 0) {
    std::cerr << "decompose: graph is empty\n";
    return 2;
  }
  const sb::MDTree tree = sb::build_md_tree(g);
  if (json) {
    std::cout << sb::md_tree_to_json(tree, tree.root).dump(2) << "\n";
  } else {
    std::cout << tree.to_text();
  }
  return 0;
}

int run_structure(const std::string& path, int vertex, bool json) {
  const sb::Graph g = sb::load_graph(path);
  if (vertex < 0 || vertex >= g.size()) {
    std::cerr << "structure: vertex out of range\n";
    return 2;
  }
  sb::StructureResult result;
  try {
    result = sb::find_triangle_free_clique(g, vertex);
  } catch (const sb::ClassViolationError& e) {
    print_violation(e.violation(), json);
    return 1;
  }
  if (json) {
    std::cout << sb::structure_to_json(result, g).dump(2) << "\n";
    return 0;
  }
  const auto print_set = [&](const char* name, const sb::VertexSet& s) {
    std::cout << name << " (" << s.count() << "):";
    for (sb::Vertex v = s.first(); v != -1; v = s.next(v)) std::cout << ' ' << v;
    std::cout << "\n";
  };
  std::cout << "cycle:";
  for (sb::Vertex v : result.witness.cycle.c) std::cout << ' ' << v;
  std::cout << "\nd: " << result.witness.d << "\nx: " << result.witness.x << "\n";
  print_set("clique F", result.partition.f);
  print_set("set T", result.partition.t);
  print_set("set W", result.partition.w);
  return 0;
}

struct GenArgs {
  std::string spec;
  std::string out;
  std::uint64_t seed = 1;
  double density = 0.5;
  std::string weight_range;
};

int run_gen(const GenArgs& a) {
  sb::Rng rng(a.seed);
  sb::Graph g;
  bool named = true;
  try {
    g = sb::named_graph(a.spec);
  } catch (const std::invalid_argument&) {
    named = false;
  }
  if (!named) {
    const auto colon = a.spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("unknown generator spec: " + a.spec);
    const std::string family = a.spec.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(a.spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad size in generator spec: " + a.spec);
    }
    if (family == "class") {
      g = sb::random_class_member(n, rng);
    } else if (family == "prime") {
      g = sb::prime_class_member_with_g7(n, rng);
    } else if (family == "umbrella") {
      g = sb::bull_free_with_umbrella(n, rng);
    } else if (family == "random") {
      g = sb::random_graph(n, a.density, rng);
    } else {
      throw std::invalid_argument("unknown generator spec: " + a.spec);
    }
  }
  if (!a.weight_range.empty()) {
    const auto colon = a.weight_range.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("weight range must look like lo:hi");
    const long lo = std::stol(a.weight_range.substr(0, colon));
    const long hi = std::stol(a.weight_range.substr(colon + 1));
    g = g.with_weights(sb::random_weights(g.size(), lo, hi, rng));
  }
  if (a.out.empty()) {
    std::cout << sb::graph_to_json(g);
  } else {
    sb::save_graph(g, a.out);
  }
  return 0;
}

struct BenchArgs {
  std::string what = "structure";
  std::vector<int> sizes = {50, 100, 200, 400};
  std::uint64_t seed = 1;
  bool json = false;
};

int run_bench(const BenchArgs& a) {
  if (a.what != "structure") {
    std::cerr << "bench: unknown target '" << a.what << "' (only 'structure')\n";
    return 2;
  }
  const auto rows = sb::run_structure_bench(a.sizes, a.seed);
  if (a.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["n"] = r.n;
      row["reps"] = r.reps;
      row["extract_ms"] = r.extract_ms;
      row["triangle_ms"] = r.triangle_ms;
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << "      n    reps  extract_ms  triangle_ms  ratio\n";
  double prev = 0.0;
  for (const auto& r : rows) {
    std::printf("%7d %7d %11.4f %12.4f", r.n, r.reps, r.extract_ms, r.triangle_ms);
    if (prev > 0.0)
      std::printf("  %5.2f\n", r.extract_ms / prev);
    else
      std::printf("      -\n");
    prev = r.extract_ms;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact maximum weight stable set solver for (P6, bull)-free graphs"};
  app.require_subcommand(1);

  std::string check_path;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "verify that a graph has no induced P6 or bull");
  check->add_option("graph", check_path, "graph file (.json/.col/.g6)")->required();
  check->add_flag("--json", check_json, "machine-readable output");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "exact maximum weight stable set");
  solve->add_option("graph", solve_args.path, "graph file (.json/.col/.g6)")->required();
  solve->add_option("--weights", solve_args.weights_path,
                    "weight sidecar (.json array or .csv vertex,weight)");
  solve->add_option("--class-check", solve_args.class_check,
                    "verify class membership first: auto (n <= 64), always, never")
      ->check(CLI::IsMember({"auto", "always", "never"}));
  solve->add_flag("--json", solve_args.json, "machine-readable output");
  solve->add_flag("--trace", solve_args.trace, "record branch decisions (needs --json)")
      ->needs("--json");
  solve->add_flag("--oracle-verify", solve_args.oracle_verify,
                  "cross-check against full enumeration (n <= 20)");
  solve->add_flag("--force", solve_args.force, "lift the n <= 20 limit of --oracle-verify");
  solve->add_flag("--parallel", solve_args.parallel, "solve the per-vertex loop in parallel");
  solve->add_option("--budget", solve_args.budget, "branch-and-bound node budget override");

  std::string dec_path;
  bool dec_json = false;
  auto* dec = app.add_subcommand("decompose", "print the modular decomposition tree");
  dec->add_option("graph", dec_path, "graph file (.json/.col/.g6)")->required();
  dec->add_flag("--json", dec_json, "machine-readable output");

  std::string struct_path;
  int struct_vertex = 0;
  bool struct_json = false;
  auto* structure = app.add_subcommand(
      "structure", "extract the triangle-free clique partition seen from one vertex");
  structure->add_option("graph", struct_path, "graph file (.json/.col/.g6)")->required();
  structure->add_option("--vertex", struct_vertex, "the outside vertex x")->required();
  structure->add_flag("--json", struct_json, "machine-readable output");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate example and test graphs");
  gen->add_option("spec", gen_args.spec,
                  "named graph (bull, p6, c5, g7, umbrella, petersen, path:<n>, cycle:<n>, "
                  "complete:<n>, empty:<n>, wheel:<k>) or family (class:<n>, prime:<n>, "
                  "umbrella:<n>, random:<n>)")
      ->required();
  gen->add_option("-o,--output", gen_args.out, "output file (.json/.col/.g6); default stdout json");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--density", gen_args.density, "edge probability for random:<n>");
  gen->add_option("--weights", gen_args.weight_range, "attach random weights lo:hi");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the structure extraction pipeline");
  bench->add_option("what", bench_args.what, "only 'structure'");
  bench->add_option("--sizes", bench_args.sizes, "instance sizes")->delimiter(',');
  bench->add_option("--seed", bench_args.seed, "random seed");
  bench->add_flag("--json", bench_args.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(check_path, check_json);
    if (solve->parsed()) return run_solve(solve_args);
    if (dec->parsed()) return run_decompose(dec_path, dec_json);
    if (structure->parsed()) return run_structure(struct_path, struct_vertex, struct_json);
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const sb::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sb::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sb::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sb::GenerationBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
