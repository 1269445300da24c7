// acceptance gate for the release checklist: each check prints exactly one
// PASS/FAIL line and the process exits with the number of failed checks.
// run as: acceptance --cli <path-to-stablebull-binary> --data <data-dir>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stablebull/bench.hpp"
#include "stablebull/detect.hpp"
#include "stablebull/generate.hpp"
#include "stablebull/io.hpp"
#include "stablebull/modular.hpp"
#include "stablebull/solver.hpp"
#include "stablebull/structure.hpp"
#include "support.hpp"

using namespace stablebull;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::string name;
  bool ok = true;
  std::string note;
};

int failures = 0;

void report(const Check& c, double seconds) {
  std::ostringstream line;
  line << (c.ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(28) << c.name
       << std::right << " [" << std::fixed << std::setprecision(1) << seconds << "s]";
  if (!c.note.empty()) line << "  " << c.note;
  std::cout << line.str() << "\n";
  if (!c.ok) ++failures;
}

template <typename Fn>
void run_check(const std::string& name, Fn&& fn) {
  Check c;
  c.name = name;
  const auto start = Clock::now();
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note = std::string("unexpected exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  report(c, secs);
}

void fail(Check& c, const std::string& why) {
  c.ok = false;
  if (c.note.empty()) c.note = why;
}

// every labeled graph on n vertices, one per edge-subset mask
Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

// oracle equivalence: solver output weight == exhaustive subset optimum on
// seeded class members with small random weights
void check_oracle_equivalence(Check& c) {
  int solved = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(1000 + static_cast<std::uint64_t>(i));
    const int n = 4 + static_cast<int>(rng.below(9));  // 4..12
    Graph g = random_class_member(n, rng);
    g = g.with_weights(random_weights(n, 0, 10, rng));
    const StableSetSolution got = mwss(g);
    const StableSetSolution want = testsupport::naive_mwss(g);
    if (!g.verify_solution(got) || got.weight != want.weight) {
      fail(c, "mismatch at seed " + std::to_string(1000 + i) + ": got " +
                  std::to_string(got.weight) + " want " + std::to_string(want.weight));
      return;
    }
    ++solved;
  }
  c.note = std::to_string(solved) + " seeded class members, n <= 12, weights 0..10";
}

// decomposition reduction: tree-driven solve with a brute-force prime solver
// equals the exhaustive optimum on arbitrary random graphs
void check_md_reduction(Check& c) {
  const PrimeSolver brute = [](const Graph& q) { return mwss_exhaustive(q); };
  int solved = 0;
  for (int i = 0; i < 500; ++i) {
    Rng rng(9000 + static_cast<std::uint64_t>(i));
    const int n = 1 + static_cast<int>(rng.below(10));  // 1..10
    const double density = 0.05 * static_cast<double>(rng.below(20));
    Graph g = random_graph(n, density, rng);
    g = g.with_weights(random_weights(n, 0, 10, rng));
    const StableSetSolution got = mwss_via_md(g, brute);
    if (!g.verify_solution(got) || got.weight != testsupport::naive_mwss(g).weight) {
      fail(c, "mismatch at seed " + std::to_string(9000 + i));
      return;
    }
    ++solved;
  }
  c.note = std::to_string(solved) + " arbitrary random graphs, n <= 10";
}

// structure certification: on grown prime members the extracted clique F
// satisfies all four clauses, rechecked here from raw adjacency
void check_structure_certification(Check& c) {
  int done = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(77000 + static_cast<std::uint64_t>(i));
    const int n = 7 + static_cast<int>(rng.below(34));  // 7..40
    const Graph g = prime_class_member_with_g7(n, rng);
    const CycleWitness cycle{{0, 1, 2, 3, 4}};
    const StructureResult r = find_triangle_free_clique(g, 6, cycle);
    const auto& p = r.partition;
    const Vertex d = r.witness.d, x = r.witness.x;
    const auto& cc = r.witness.cycle.c;

    // clause 1: the four blocks partition the vertex set
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
      hits[static_cast<std::size_t>(v)] = (p.c_set.contains(v) ? 1 : 0) +
                                          (p.f.contains(v) ? 1 : 0) + (p.t.contains(v) ? 1 : 0) +
                                          (p.w.contains(v) ? 1 : 0);
      if (hits[static_cast<std::size_t>(v)] != 1) {
        fail(c, "partition miss at seed " + std::to_string(77000 + i));
        return;
      }
    }
    // clause 2: F complete to the first four cycle vertices, anticomplete to
    // the fifth, to d and to x
    for (Vertex f = p.f.first(); f != -1; f = p.f.next(f)) {
      for (int j = 0; j < 4; ++j)
        if (!g.adjacent(f, cc[static_cast<std::size_t>(j)])) {
          fail(c, "F attachment miss at seed " + std::to_string(77000 + i));
          return;
        }
      if (g.adjacent(f, cc[4]) || g.adjacent(f, d) || g.adjacent(f, x)) {
        fail(c, "F anticompleteness miss at seed " + std::to_string(77000 + i));
        return;
      }
    }
    // clause 3: F is a clique
    for (Vertex f1 = p.f.first(); f1 != -1; f1 = p.f.next(f1))
      for (Vertex f2 = p.f.next(f1); f2 != -1; f2 = p.f.next(f2))
        if (!g.adjacent(f1, f2)) {
          fail(c, "F clique miss at seed " + std::to_string(77000 + i));
          return;
        }
    // clause 4: removing F leaves a triangle-free graph
    for (Vertex a = 0; a < n; ++a) {
      if (p.f.contains(a)) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if (p.f.contains(b) || !g.adjacent(a, b)) continue;
        for (Vertex e = b + 1; e < n; ++e) {
          if (p.f.contains(e)) continue;
          if (g.adjacent(a, e) && g.adjacent(b, e)) {
            fail(c, "triangle outside F at seed " + std::to_string(77000 + i));
            return;
          }
        }
      }
    }
    ++done;
  }
  c.note = std::to_string(done) + " grown prime members, 7 <= n <= 40";
}

// neighbor rules: empty on every bull-free graph with an induced C5, and a
// bull is always recoverable whenever any rule fires
void check_neighbor_rules(Check& c) {
  long long graphs_with_c5 = 0, bull_free_with_c5 = 0, fired = 0;
  const auto inspect = [&](const Graph& g) -> bool {
    const bool bull_free = !testsupport::naive_has_bull(g);
    bool saw_c5 = false;
    bool ok = true;
    for_each_induced_c5(g, g.vertex_set(), [&](const CycleWitness& w) {
      saw_c5 = true;
      const auto rules = check_cycle_neighbor_rules(g, w, classify_c5_neighbors(g, w));
      if (bull_free && !rules.empty()) ok = false;
      if (!rules.empty()) {
        ++fired;
        if (!find_bull(g).has_value()) ok = false;
      }
      return !ok;
    });
    if (saw_c5) {
      ++graphs_with_c5;
      if (bull_free) ++bull_free_with_c5;
    }
    return ok;
  };

  for (int n = 5; n <= 6; ++n) {
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!inspect(graph_from_mask(n, mask))) {
        fail(c, "exhaustive miss at n=" + std::to_string(n) + " mask=" + std::to_string(mask));
        return;
      }
    }
  }
  for (int n = 7; n <= 8; ++n) {
    for (int i = 0; i < 5000; ++i) {
      Rng rng(static_cast<std::uint64_t>(n) * 100000 + static_cast<std::uint64_t>(i));
      const double density = 0.05 + 0.05 * static_cast<double>(rng.below(12));
      const Graph g = random_with_planted_c5(n, density, rng);
      if (!inspect(g)) {
        fail(c, "random miss at n=" + std::to_string(n) + " i=" + std::to_string(i));
        return;
      }
    }
  }
  std::ostringstream note;
  note << graphs_with_c5 << " graphs with a C5 (" << bull_free_with_c5 << " bull-free), "
       << fired << " rule firings";
  c.note = note.str();
}

// umbrella reduction: the constructed set H is homogeneous, proper and
// contains the witness cycle on bull-free umbrella instances
void check_umbrella_sets(Check& c) {
  int done = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(300000 + static_cast<std::uint64_t>(i));
    const int n = 7 + static_cast<int>(rng.below(14));  // 7..20
    const Graph g = bull_free_with_umbrella(n, rng);
    const auto umb = find_umbrella(g);
    if (!umb.has_value()) {
      fail(c, "umbrella lost at seed " + std::to_string(300000 + i));
      return;
    }
    const HomogeneousSetCertificate cert = homogeneous_set_from_umbrella(g, *umb);
    bool ok = testsupport::naive_is_module(g, cert.h);
    for (Vertex v : umb->cycle.c) ok = ok && cert.h.contains(v);
    ok = ok && cert.h.count() >= 2 && cert.h.count() < static_cast<std::size_t>(n);
    if (!ok) {
      fail(c, "bad homogeneous set at seed " + std::to_string(300000 + i));
      return;
    }
    ++done;
  }
  c.note = std::to_string(done) + " bull-free umbrella instances, 7 <= n <= 20";
}

// witness properties: d really is a 2-neighbor reached at distance 2, the
// relabeled cycle has no 3-/5-neighbors, and 4-neighbors miss only the last
// cycle vertex; all rechecked from raw adjacency and a local BFS
void check_witness_properties(Check& c) {
  int done = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(500000 + static_cast<std::uint64_t>(i));
    const int n = 7 + static_cast<int>(rng.below(34));  // 7..40
    const Graph g = prime_class_member_with_g7(n, rng);
    const CycleWitness cycle{{0, 1, 2, 3, 4}};
    const Vertex x = 6;
    const G7Witness w = find_g7_witness(g, x, cycle);

    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    for (Vertex ci : cycle.c) {
      dist[static_cast<std::size_t>(ci)] = 0;
      queue.push_back(ci);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex u : g.neighbor_list(v)) {
        if (dist[static_cast<std::size_t>(u)] == -1) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(u);
        }
      }
    }

    bool ok = dist[static_cast<std::size_t>(x)] == 2 &&
              dist[static_cast<std::size_t>(w.d)] == 1 && g.adjacent(w.d, x);
    int d_hits = 0;
    for (Vertex ci : w.cycle.c) d_hits += g.adjacent(w.d, ci) ? 1 : 0;
    ok = ok && d_hits == 2 && g.adjacent(w.d, w.cycle.c[0]) && g.adjacent(w.d, w.cycle.c[3]);

    for (Vertex v = 0; v < n && ok; ++v) {
      if (w.cycle.contains(v)) continue;
      int k = 0;
      for (Vertex ci : w.cycle.c) k += g.adjacent(v, ci) ? 1 : 0;
      if (k == 3 || k == 5) ok = false;
      if (k == 4) {
        for (int j = 0; j < 4; ++j)
          if (!g.adjacent(v, w.cycle.c[static_cast<std::size_t>(j)])) ok = false;
        if (g.adjacent(v, w.cycle.c[4])) ok = false;
      }
    }
    if (!ok) {
      fail(c, "witness property miss at seed " + std::to_string(500000 + i));
      return;
    }
    ++done;
  }
  c.note = std::to_string(done) + " witnesses rechecked by BFS and adjacency";
}

// perfectness dichotomy: inside prime class members, every non-neighborhood
// component with no induced C5 is perfect (no odd hole, no odd antihole)
void check_perfectness_dichotomy(Check& c) {
  int graphs = 0, components = 0, perfect_checked = 0;
  for (int i = 0; graphs < 200 && i < 2000; ++i) {
    Rng rng(700000 + static_cast<std::uint64_t>(i));
    Graph g;
    if (i % 2 == 0) {
      g = prime_class_member_with_g7(7 + static_cast<int>(rng.below(6)), rng);
    } else {
      g = random_class_member(4 + static_cast<int>(rng.below(9)), rng);
      if (!is_prime(g) || g.size() < 4) continue;
    }
    ++graphs;
    for (Vertex x = 0; x < g.size(); ++x) {
      for (const VertexSet& k : g.components_within(g.non_neighborhood(x))) {
        ++components;
        const InducedSubgraph sub = g.induced_subgraph(k);
        if (testsupport::naive_has_c5(sub.graph)) continue;
        ++perfect_checked;
        if (!testsupport::naive_is_perfect(sub.graph)) {
          fail(c, "imperfect C5-free component at seed " + std::to_string(700000 + i) +
                      " x=" + std::to_string(x));
          return;
        }
      }
    }
  }
  std::ostringstream note;
  note << graphs << " prime members, " << perfect_checked << "/" << components
       << " components proved perfect";
  c.note = note.str();
}

// scaling: mean extraction time grows at most 5.5x per size doubling
void check_scaling(Check& c) {
  const std::vector<int> sizes = {50, 100, 200, 400};
  const std::vector<StructureBenchRow> rows = run_structure_bench(sizes, 12345);
  std::ostringstream note;
  note << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) note << ", ";
    note << "n=" << rows[i].n << ":" << rows[i].extract_ms << "ms";
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double prev = rows[i - 1].extract_ms > 1e-6 ? rows[i - 1].extract_ms : 1e-6;
    const double ratio = rows[i].extract_ms / prev;
    if (ratio > 5.5) {
      fail(c, note.str() + " -- ratio " + std::to_string(ratio) + " exceeds 5.5");
      return;
    }
  }
  c.note = note.str();
}

// determinism: equal inputs and seeds reproduce byte-identical files and
// byte-identical --json solver output through the installed binary
void check_determinism(Check& c, const std::string& cli, const std::string& data_dir) {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path();
  const fs::path g1 = tmp / "stablebull_accept_gen1.json";
  const fs::path g2 = tmp / "stablebull_accept_gen2.json";
  const fs::path s1 = tmp / "stablebull_accept_solve1.txt";
  const fs::path s2 = tmp / "stablebull_accept_solve2.txt";

  const auto sh = [&](const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return rc == 0;
  };
  const auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };

  bool ok = true;
  ok = ok && sh("\"" + cli + "\" gen prime:24 --seed 7 --weights 0:9 -o " + q(g1));
  ok = ok && sh("\"" + cli + "\" gen prime:24 --seed 7 --weights 0:9 -o " + q(g2));
  if (!ok) {
    fail(c, "generator runs did not exit cleanly");
    return;
  }
  if (read_file(g1.string()) != read_file(g2.string())) {
    fail(c, "generator output differs between identical runs");
    return;
  }

  ok = ok && sh("\"" + cli + "\" solve " + q(g1) + " --json --trace > " + q(s1));
  ok = ok && sh("\"" + cli + "\" solve " + q(g1) + " --json --trace > " + q(s2));
  if (!ok) {
    fail(c, "solver runs did not exit cleanly");
    return;
  }
  if (read_file(s1.string()) != read_file(s2.string())) {
    fail(c, "solver --json output differs between identical runs");
    return;
  }

  const fs::path bundled = fs::path(data_dir) / "g7.json";
  const fs::path b1 = tmp / "stablebull_accept_bundled1.txt";
  const fs::path b2 = tmp / "stablebull_accept_bundled2.txt";
  ok = ok && sh("\"" + cli + "\" solve " + q(bundled) + " --json > " + q(b1));
  ok = ok && sh("\"" + cli + "\" solve " + q(bundled) + " --json > " + q(b2));
  if (!ok || read_file(b1.string()) != read_file(b2.string())) {
    fail(c, "bundled-input solve output differs between identical runs");
    return;
  }

  for (const fs::path& p : {g1, g2, s1, s2, b1, b2}) fs::remove(p);
  c.note = "generator files and --json outputs byte-identical across reruns";
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, data_dir;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--cli") cli = argv[i + 1];
    if (key == "--data") data_dir = argv[i + 1];
  }
  if (cli.empty() || data_dir.empty()) {
    std::cerr << "usage: acceptance --cli <stablebull-binary> --data <data-dir>\n";
    return 2;
  }

  run_check("oracle-equivalence", check_oracle_equivalence);
  run_check("md-reduction", check_md_reduction);
  run_check("structure-certification", check_structure_certification);
  run_check("neighbor-rules", check_neighbor_rules);
  run_check("umbrella-sets", check_umbrella_sets);
  run_check("witness-properties", check_witness_properties);
  run_check("perfectness-dichotomy", check_perfectness_dichotomy);
  run_check("quadratic-scaling", check_scaling);
  run_check("determinism", [&](Check& c) { check_determinism(c, cli, data_dir); });

  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << "\n";
  return failures;
}
