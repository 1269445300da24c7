#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stablebull/detect.hpp"
#include "stablebull/graph.hpp"

namespace stablebull {

enum class ViolationKind {
  bull_found,
  p6_found,
  homogeneous_set_found,
  three_neighbor_present,
  five_neighbor_present,
  four_neighbor_attachment,
  f_attachment,
  f_not_clique,
  triangle_outside_f,
};

const char* violation_kind_name(ViolationKind kind);

/// Structured certificate that an input was outside the solvable class:
/// either a forbidden induced subgraph (bull / P6), a proper homogeneous
/// set (so the graph is not prime), or a failed structural clause whose
/// listed vertices pinpoint the offending configuration.
struct Violation {
  ViolationKind kind;
  std::vector<Vertex> vertices;
  std::string detail;

  std::string to_text() const;
};

class ClassViolationError : public std::runtime_error {
 public:
  explicit ClassViolationError(Violation v)
      : std::runtime_error(v.to_text()), violation_(std::move(v)) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Embedded copy of the seven-vertex graph G7: an induced C5, a 2-neighbor
/// d attached to cycle[0] and cycle[3], and a C5-anticomplete vertex x
/// pendant on d.  The seven vertices induce exactly G7's eight edges.
struct G7Witness {
  CycleWitness cycle;
  Vertex d = -1;
  Vertex x = -1;
};

/// Throws std::invalid_argument when the seven vertices do not induce G7.
void verify_g7_witness(const Graph& g, const G7Witness& w);

/// Vertex partition around a G7 witness: F = 4-neighbors of the cycle
/// (a clique, complete to cycle[0..3], anticomplete to cycle[4], d and x),
/// T = 2-neighbors, W = 0-/1-neighbors.  g minus F is triangle-free.
struct StructurePartition {
  CycleWitness cycle;
  VertexSet c_set, f, t, w;
};

/// Umbrella-driven homogeneous set construction (valid in any bull-free
/// graph): A = vertices complete to the cycle, Z = vertices anticomplete
/// to it, A' = members of A with a neighbor in Z, A'' = members of A - A'
/// with a non-neighbor in A', and h = the component of g - (A' u A'')
/// containing the cycle.  h is then a proper homogeneous set.
struct HomogeneousSetCertificate {
  VertexSet a, z, a_prime, a_second, h;
};

/// Throws ClassViolationError with a bull certificate when the homogeneity
/// of h fails (only possible if g was not bull-free after all), and
/// std::invalid_argument when the umbrella witness itself is malformed.
HomogeneousSetCertificate homogeneous_set_from_umbrella(const Graph& g,
                                                        const UmbrellaWitness& umbrella);

/// Walks a shortest path from the cycle to x; in a prime (P6,bull)-free
/// graph it has exactly one intermediate layer and its first step d is a
/// 2-neighbor, giving a G7 copy after relabeling the cycle so that d
/// attaches to cycle[0] and cycle[3] (lexicographically least of the two
/// possible relabelings).  Any other shape yields a ClassViolationError
/// carrying a bull, a P6, or a proper homogeneous set.
/// Pre: cycle is an induced C5 of g and x is anticomplete to it.
G7Witness find_g7_witness(const Graph& g, Vertex x, const CycleWitness& cycle);

struct ExtractOptions {
  /// The F-clique and attachment clauses are O(n^2); certifying that g - F
  /// is triangle-free costs O(n*m) and can be deferred by benchmarks that
  /// time the quadratic phase.
  bool verify_triangle_free = true;
};

/// Classifies every vertex against the witness cycle and verifies the
/// structural clauses (no 3-/5-neighbors; every 4-neighbor misses exactly
/// cycle[4] and avoids d and x; F is a clique; optionally g - F is
/// triangle-free).  Clause failures throw ClassViolationError.
StructurePartition extract_structure_partition(const Graph& g, const G7Witness& w,
                                               const ExtractOptions& opts = {});

struct StructureResult {
  G7Witness witness;
  StructurePartition partition;
};

/// find_g7_witness + extract_structure_partition for a caller-supplied C5.
StructureResult find_triangle_free_clique(const Graph& g, Vertex x, const CycleWitness& cycle,
                                          const ExtractOptions& opts = {});
/// Convenience overload that first searches for the lexicographically
/// least induced C5 among non-neighbors of x; throws std::invalid_argument
/// when none exists.
StructureResult find_triangle_free_clique(const Graph& g, Vertex x,
                                          const ExtractOptions& opts = {});

}  // namespace stablebull
