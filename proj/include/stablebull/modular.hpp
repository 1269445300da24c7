#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stablebull/graph.hpp"

namespace stablebull {

/// True iff every vertex outside s is complete or anticomplete to s.
bool is_module(const Graph& g, const VertexSet& s);

/// Smallest module containing both u and v, computed by splitter closure:
/// repeatedly absorb any outside vertex with both a neighbor and a
/// non-neighbor inside.  The fixpoint is order-independent.
VertexSet smallest_module_containing(const Graph& g, Vertex u, Vertex v);

/// A proper homogeneous set (2 <= |S| < n) if one exists, scanning vertex
/// pairs in ascending lexicographic order; nullopt means g is prime.
std::optional<VertexSet> find_proper_homogeneous_set(const Graph& g);

bool is_prime(const Graph& g);

struct MDNode {
  enum class Kind { leaf, series, parallel, prime };
  Kind kind = Kind::leaf;
  Vertex vertex = -1;       // leaf only
  VertexSet members;        // vertices of g covered by this node
  std::vector<int> children;
  // prime only: the smallest member of each child, in child order; these
  // vertices induce the prime quotient graph
  std::vector<Vertex> representatives;
};

/// Modular decomposition tree.  Children are ordered by smallest member,
/// node 0 is the root, and every node's member set is a strong module.
struct MDTree {
  std::vector<MDNode> nodes;
  int root = 0;

  const MDNode& operator[](int i) const { return nodes[static_cast<std::size_t>(i)]; }
  std::string to_text() const;
};

/// Recursive decomposition: disconnected -> parallel over components,
/// co-disconnected -> series over co-components, otherwise a prime node
/// over the maximal proper modules (found via splitter closures).
/// Requires n >= 1.
MDTree build_md_tree(const Graph& g);

using PrimeSolver = std::function<StableSetSolution(const Graph&)>;

/// Maximum-weight stable set through the decomposition tree: parallel
/// nodes take the union of child solutions, series nodes the best child,
/// and prime nodes solve the quotient with each representative weighted by
/// its module's own optimum, then expand the chosen representatives.
/// Exact for any graph as long as prime_solver is exact on prime graphs.
StableSetSolution mwss_via_md(const Graph& g, const PrimeSolver& prime_solver);

}  // namespace stablebull
