#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablebull/graph.hpp"
#include "stablebull/modular.hpp"
#include "stablebull/structure.hpp"

namespace stablebull {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node budget for the branch-and-bound oracle, read once from the
/// STABLEBULL_NODE_BUDGET environment variable (default 50 million nodes).
std::uint64_t default_node_budget();

/// Plain subset enumeration over all 2^n vertex subsets: the independent
/// reference used to validate every other solve path.  Refuses n > 25.
StableSetSolution mwss_exhaustive(const Graph& g);

/// Exact branch-and-bound: branches on the max-degree vertex of the open
/// subproblem (in/out), bounds with a greedy weighted clique cover.
/// Throws BudgetError when the node budget runs out; budget 0 means
/// default_node_budget().
StableSetSolution mwss_exact_oracle(const Graph& g, std::uint64_t node_budget = 0);

struct SolveOptions {
  enum class ClassCheck { automatic, always, never };
  /// mwss() verifies (P6,bull)-freeness up front: `automatic` does so when
  /// n <= auto_check_limit.  mwss_prime() never pre-checks the class;
  /// out-of-class inputs surface as violation certificates only when the
  /// structural machinery actually trips over them.
  ClassCheck class_check = ClassCheck::automatic;
  int auto_check_limit = 64;
  bool parallel = false;
  std::uint64_t node_budget = 0;  // 0 = default_node_budget()
  /// Exact solver for the leaf subproblems (perfect branch and the c5
  /// branch's F-restricted calls); defaults to mwss_exact_oracle.  A
  /// polynomial triangle-free / perfect-graph routine can drop in here.
  PrimeSolver leaf_solver;
};

struct ComponentTrace {
  VertexSet component;
  bool c5_branch = false;
  std::optional<G7Witness> witness;
  VertexSet clique_f;
  int leaf_calls = 0;
  StableSetSolution best;
};

struct VertexTrace {
  Vertex x = -1;
  std::vector<ComponentTrace> components;
  StableSetSolution total;
};

/// Trace of the per-vertex solve loop.  One PrimeCall is appended for each
/// prime (quotient) graph solved; vertex ids inside are local to that
/// quotient and `labels` maps them back to names of the original graph.
struct SolveTrace {
  struct PrimeCall {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<VertexTrace> vertices;
    StableSetSolution best;
  };
  std::vector<PrimeCall> calls;
};

/// Exact solve of one component k of the non-neighborhood of x.  If g[k]
/// has no induced C5 the leaf solver takes it whole (the component is
/// perfect in a prime class member); otherwise the triangle-free clique F
/// is extracted and the best of "no F vertex" and "{f} plus the optimum
/// avoiding N(f)", f in F, wins.  A stable set meets the clique F at most
/// once, so the case split is exhaustive.
StableSetSolution solve_component(const Graph& g, Vertex x, const VertexSet& k,
                                  const SolveOptions& opts = {},
                                  ComponentTrace* trace = nullptr);

/// Exact solver for prime graphs: for every vertex x, a best stable set
/// containing x is x plus independent optima of the components of its
/// non-neighborhood; the best over all x wins.  Primality is verified and
/// its failure throws a homogeneous-set certificate.
StableSetSolution mwss_prime(const Graph& g, const SolveOptions& opts = {},
                             SolveTrace* trace = nullptr);

/// Full pipeline: optional class verification, then modular decomposition
/// with mwss_prime on every prime quotient.
StableSetSolution mwss(const Graph& g, const SolveOptions& opts = {},
                       SolveTrace* trace = nullptr);

}  // namespace stablebull
