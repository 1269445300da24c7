#include "stablebull/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <thread>

#include "stablebull/detect.hpp"

namespace stablebull {

std::uint64_t default_node_budget() {
  static const std::uint64_t budget = [] {
    const char* raw = std::getenv("STABLEBULL_NODE_BUDGET");
    if (raw == nullptr) return std::uint64_t{50'000'000};
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0) return std::uint64_t{50'000'000};
    return static_cast<std::uint64_t>(parsed);
  }();
  return budget;
}

StableSetSolution mwss_exhaustive(const Graph& g) {
  const int n = g.size();
  if (n > 25) throw std::invalid_argument("mwss_exhaustive: refusing n > 25 (subset blowup)");
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbor_list(v)) nbr[v] |= std::uint32_t{1} << u;

  std::uint32_t best_mask = 0;
  Weight best_weight = 0;
  const std::uint32_t limit = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    std::uint32_t rest = mask;
    Weight w = 0;
    bool stable = true;
    while (rest != 0) {
      const int v = std::countr_zero(rest);
      if ((nbr[v] & mask) != 0) {
        stable = false;
        break;
      }
      w += g.weight(v);
      rest &= rest - 1;
    }
    if (stable && w > best_weight) {
      best_weight = w;
      best_mask = mask;
    }
  }

  StableSetSolution out{VertexSet(n), best_weight};
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1u) out.vertices.add(v);
  return out;
}

namespace {

struct BranchAndBound {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  StableSetSolution best;

  explicit BranchAndBound(const Graph& graph, std::uint64_t b)
      : g(graph), budget(b), best{VertexSet(graph.size()), 0} {}

  // greedy weighted clique cover of the open set: every stable set picks at
  // most one vertex per clique, so the sum of per-clique maxima is an upper
  // bound on what the open set can still contribute.
  Weight cover_bound(const VertexSet& open) const {
    std::vector<VertexSet> cliques;
    std::vector<Weight> top;
    for (Vertex v = open.first(); v != -1; v = open.next(v)) {
      bool placed = false;
      for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].is_subset_of(g.neighbors(v))) {
          cliques[i].add(v);
          top[i] = std::max(top[i], g.weight(v));
          placed = true;
          break;
        }
      }
      if (!placed) {
        cliques.push_back(VertexSet(g.size(), {v}));
        top.push_back(g.weight(v));
      }
    }
    Weight bound = 0;
    for (Weight w : top) bound += w;
    return bound;
  }

  void run(const VertexSet& open, const VertexSet& picked, Weight picked_weight) {
    if (++nodes > budget)
      throw BudgetError(
          "branch-and-bound node budget exhausted; raise STABLEBULL_NODE_BUDGET");
    if (open.empty()) {
      if (picked_weight > best.weight) best = {picked, picked_weight};
      return;
    }
    if (picked_weight + cover_bound(open) <= best.weight) return;

    Vertex pivot = -1;
    std::size_t pivot_deg = 0;
    for (Vertex v = open.first(); v != -1; v = open.next(v)) {
      const std::size_t deg = (g.neighbors(v) & open).count();
      if (pivot == -1 || deg > pivot_deg) {
        pivot = v;
        pivot_deg = deg;
      }
    }

    VertexSet with = picked;
    with.add(pivot);
    VertexSet open_in = open - g.neighbors(pivot);
    open_in.remove(pivot);
    run(open_in, with, picked_weight + g.weight(pivot));

    VertexSet open_out = open;
    open_out.remove(pivot);
    run(open_out, picked, picked_weight);
  }
};

StableSetSolution lift(const Graph& host, const InducedSubgraph& sub,
                       const StableSetSolution& s) {
  StableSetSolution out{VertexSet(host.size()), s.weight};
  for (Vertex v = s.vertices.first(); v != -1; v = s.vertices.next(v))
    out.vertices.add(sub.original[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

StableSetSolution mwss_exact_oracle(const Graph& g, std::uint64_t node_budget) {
  BranchAndBound bb(g, node_budget == 0 ? default_node_budget() : node_budget);
  VertexSet open(g.size());
  for (Vertex v = 0; v < g.size(); ++v) open.add(v);
  bb.run(open, VertexSet(g.size()), 0);
  assert(g.verify_solution(bb.best));
  return bb.best;
}

StableSetSolution solve_component(const Graph& g, Vertex x, const VertexSet& k,
                                  const SolveOptions& opts, ComponentTrace* trace) {
  if (x < 0 || x >= g.size()) throw std::invalid_argument("solve_component: bad vertex");
  if (k.contains(x) || k.intersects(g.neighbors(x)))
    throw std::invalid_argument("solve_component: k must avoid the closed neighborhood of x");
  const std::uint64_t budget = opts.node_budget;
  const PrimeSolver leaf = opts.leaf_solver
                               ? opts.leaf_solver
                               : [budget](const Graph& h) { return mwss_exact_oracle(h, budget); };

  if (trace != nullptr) {
    trace->component = k;
    trace->clique_f = VertexSet(g.size());
    trace->leaf_calls = 0;
  }

  const InducedSubgraph sub = g.induced_subgraph(k);
  const auto cycle_local = find_induced_c5(sub.graph);
  if (!cycle_local.has_value()) {
    const StableSetSolution best = lift(g, sub, leaf(sub.graph));
    if (trace != nullptr) {
      trace->c5_branch = false;
      trace->leaf_calls = 1;
      trace->best = best;
    }
    return best;
  }

  CycleWitness cycle{};
  for (int i = 0; i < 5; ++i)
    cycle.c[static_cast<std::size_t>(i)] =
        sub.original[static_cast<std::size_t>(cycle_local->c[static_cast<std::size_t>(i)])];
  const StructureResult sr = find_triangle_free_clique(g, x, cycle);
  const VertexSet& f_clique = sr.partition.f;
  if (!f_clique.is_subset_of(k))
    throw std::logic_error("solve_component: clique F escaped the component");

  int leaf_calls = 0;
  const auto solve_restricted = [&](const VertexSet& allowed) {
    ++leaf_calls;
    const InducedSubgraph part = g.induced_subgraph(allowed);
    return lift(g, part, leaf(part.graph));
  };

  // a stable set uses at most one vertex of the clique F: compare skipping
  // F entirely against committing to each f in turn.
  StableSetSolution best = solve_restricted(k - f_clique);
  for (Vertex f = f_clique.first(); f != -1; f = f_clique.next(f)) {
    VertexSet allowed = k - g.neighbors(f);
    allowed.remove(f);
    StableSetSolution with_f = solve_restricted(allowed);
    with_f.vertices.add(f);
    with_f.weight += g.weight(f);
    if (better_solution(with_f, best)) best = std::move(with_f);
  }

  if (trace != nullptr) {
    trace->c5_branch = true;
    trace->witness = sr.witness;
    trace->clique_f = f_clique;
    trace->leaf_calls = leaf_calls;
    trace->best = best;
  }
  assert(best.vertices.is_subset_of(k));
  return best;
}

namespace {

VertexTrace solve_for_vertex(const Graph& g, Vertex x, const SolveOptions& opts,
                             bool want_trace) {
  VertexTrace vt;
  vt.x = x;
  StableSetSolution total{VertexSet(g.size(), {x}), g.weight(x)};
  for (const VertexSet& k : g.components_within(g.non_neighborhood(x))) {
    ComponentTrace ct;
    const StableSetSolution part =
        solve_component(g, x, k, opts, want_trace ? &ct : nullptr);
    total.vertices |= part.vertices;
    total.weight += part.weight;
    if (want_trace) vt.components.push_back(std::move(ct));
  }
  vt.total = std::move(total);
  return vt;
}

}  // namespace

StableSetSolution mwss_prime(const Graph& g, const SolveOptions& opts, SolveTrace* trace) {
  const int n = g.size();
  if (n == 0) return {VertexSet(0), 0};

  if (const auto hom = find_proper_homogeneous_set(g); hom.has_value()) {
    Violation v{ViolationKind::homogeneous_set_found, hom->to_vector(),
                "graph is not prime: proper homogeneous set found"};
    throw ClassViolationError(std::move(v));
  }

  std::vector<VertexTrace> rows(static_cast<std::size_t>(n));
  const bool want_trace = trace != nullptr;
  if (opts.parallel && n > 1) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int x = next.fetch_add(1); x < n; x = next.fetch_add(1))
            rows[static_cast<std::size_t>(x)] = solve_for_vertex(g, x, opts, want_trace);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (Vertex x = 0; x < n; ++x)
      rows[static_cast<std::size_t>(x)] = solve_for_vertex(g, x, opts, want_trace);
  }

  StableSetSolution best = rows[0].total;
  for (int x = 1; x < n; ++x)
    if (better_solution(rows[x].total, best)) best = rows[x].total;
  assert(g.verify_solution(best));

  if (trace != nullptr) {
    SolveTrace::PrimeCall call;
    call.n = n;
    call.labels.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) call.labels.push_back(g.label(v));
    call.vertices = std::move(rows);
    call.best = best;
    trace->calls.push_back(std::move(call));
  }
  return best;
}

StableSetSolution mwss(const Graph& g, const SolveOptions& opts, SolveTrace* trace) {
  const int n = g.size();
  if (n == 0) return {VertexSet(0), 0};

  const bool check =
      opts.class_check == SolveOptions::ClassCheck::always ||
      (opts.class_check == SolveOptions::ClassCheck::automatic && n <= opts.auto_check_limit);
  if (check) {
    if (const auto bull = find_bull(g); bull.has_value()) {
      Violation v{ViolationKind::bull_found,
                  {bull->a, bull->b, bull->c, bull->d, bull->e},
                  "input contains an induced bull"};
      throw ClassViolationError(std::move(v));
    }
    if (const auto p6 = find_induced_path6(g); p6.has_value()) {
      Violation v{ViolationKind::p6_found, p6->vertices,
                  "input contains an induced six-vertex path"};
      throw ClassViolationError(std::move(v));
    }
  }

  const StableSetSolution best = mwss_via_md(
      g, [&](const Graph& quotient) { return mwss_prime(quotient, opts, trace); });
  assert(g.verify_solution(best));
  return best;
}

}  // namespace stablebull
