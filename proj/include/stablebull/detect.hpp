#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stablebull/graph.hpp"

namespace stablebull {

/// An induced 5-cycle c[0]-c[1]-c[2]-c[3]-c[4]-c[0].  Indices are read
/// cyclically; c[i] and c[i+1] are adjacent, all other pairs are not.
struct CycleWitness {
  std::array<Vertex, 5> c;

  VertexSet set(std::size_t universe) const {
    VertexSet s(universe);
    for (Vertex v : c) s.add(v);
    return s;
  }
  bool contains(Vertex v) const {
    return v == c[0] || v == c[1] || v == c[2] || v == c[3] || v == c[4];
  }
};

/// Induced path on its vertices in path order (ends first/last).
struct PathWitness {
  std::vector<Vertex> vertices;
};

/// The bull: triangle {b, c, e} with horn a attached to b and horn d
/// attached to c.  Edges ab, bc, cd, be, ce and nothing else.
struct BullWitness {
  Vertex a, b, c, d, e;
  std::array<Vertex, 5> vertices() const { return {a, b, c, d, e}; }
};

/// 5-wheel (cycle + center complete to it) plus a pendant vertex adjacent
/// to the center and to nothing else of the seven.
struct UmbrellaWitness {
  CycleWitness cycle;
  Vertex center = -1;
  Vertex pendant = -1;
};

/// Induced cycle of length >= 6 whose vertices are all adjacent to center.
struct WheelWitness {
  std::vector<Vertex> cycle;
  Vertex center = -1;
};

bool is_induced_c5(const Graph& g, const CycleWitness& w);

/// Detectors are pruned backtracking searches over partial embeddings with
/// bitset candidate filtering.  Each returns the first witness in a fixed
/// deterministic enumeration order (vertex ids ascending at every slot), so
/// results are reproducible across runs.
std::optional<PathWitness> find_induced_path6(const Graph& g);
std::optional<BullWitness> find_bull(const Graph& g);
std::optional<CycleWitness> find_induced_c5(const Graph& g);
std::optional<CycleWitness> find_induced_c5_within(const Graph& g, const VertexSet& allowed);
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);
std::optional<UmbrellaWitness> find_umbrella(const Graph& g);
/// Wheels of length k_min or more only; k_min must be at least 6.
std::optional<WheelWitness> find_wheel(const Graph& g, int k_min = 6);

/// Enumerates induced 5-cycles inside `allowed` in canonical form
/// (c[0] minimal, c[1] < c[4]) and ascending lexicographic order; stops
/// early when fn returns true.  Returns whether fn stopped the scan.
bool for_each_induced_c5(const Graph& g, const VertexSet& allowed,
                         const std::function<bool(const CycleWitness&)>& fn);

/// Per-vertex attachment of everything outside an induced C5: for v not on
/// the cycle, mask bit i is set iff v is adjacent to c[i], and k = popcount
/// is its neighbor count on the cycle.  Cycle vertices carry k = -1.
struct NeighborClassification {
  CycleWitness cycle;
  VertexSet on_cycle;
  std::vector<std::uint8_t> mask;  // 5 bits per vertex, 0 for cycle members
  std::vector<int> k;              // 0..5, or -1 for cycle members
  std::array<std::vector<Vertex>, 6> buckets;  // buckets[j] = all j-neighbors

  VertexSet bucket_set(int j) const {
    VertexSet s(mask.size());
    for (Vertex v : buckets[static_cast<std::size_t>(j)]) s.add(v);
    return s;
  }
};

/// Masks a 2-neighbor may legally have: the two attachment points at cycle
/// distance two ({c[i], c[i+2]}).  Adjacent pairs force a bull nearby.
bool is_valid_two_neighbor_mask(std::uint8_t mask);
/// Masks a 3-neighbor may legally have: three consecutive cycle vertices.
bool is_valid_three_neighbor_mask(std::uint8_t mask);

/// Throws std::invalid_argument when the witness is not an induced C5 of g.
NeighborClassification classify_c5_neighbors(const Graph& g, const CycleWitness& cycle);

/// One failed rule of the bull-free C5 neighborhood laws.  `rule` is
/// 1..5 matching: (1) 2-neighbor attachment shape, (2) 3-neighbor shape,
/// (3) 5-neighbors see all 1-/2-neighbors, (4) a 4-neighbor missing c[i]
/// forces 1-neighbors onto c[i], (5) neighbors of C-non-neighbors that
/// touch C are 1-, 2- or 5-neighbors.
struct NeighborRuleViolation {
  int rule = 0;
  std::vector<Vertex> vertices;
  std::string detail;
};

/// Violations are reported as data, never thrown: an empty result on a
/// bull-free graph is the expected outcome, and any nonempty result
/// certifies that a bull exists somewhere in g.
std::vector<NeighborRuleViolation> check_cycle_neighbor_rules(
    const Graph& g, const CycleWitness& cycle, const NeighborClassification& cls);

}  // namespace stablebull
