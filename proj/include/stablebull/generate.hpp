#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablebull/graph.hpp"

namespace stablebull {

class GenerationBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded random stream.  Sampling is hand-rolled on top of mt19937_64
/// (rejection for unbiased bounded draws) because the standard
/// distributions are implementation-defined and would break cross-platform
/// reproducibility of seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform draw from [0, n), unbiased, n > 0.
  std::uint64_t below(std::uint64_t n);

  /// Uniform draw from [lo, hi], inclusive.
  int range(int lo, int hi);

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Small catalogue of fixed graphs by name: "bull", "p6", "c5", "g7",
/// "umbrella", "petersen", and parametric "path:<n>", "cycle:<n>",
/// "complete:<n>", "empty:<n>", "wheel:<k>" (hub plus k-cycle).
/// Throws std::invalid_argument for unknown names or bad parameters.
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

/// Erdos-Renyi style sample: each pair becomes an edge with probability
/// `density` (clamped to [0,1], resolved at microprobability granularity).
Graph random_graph(int n, double density, Rng& rng);

std::vector<Weight> random_weights(int n, Weight lo, Weight hi, Rng& rng);

struct GenOptions {
  int attempts = 2000;        // total tries before giving up
  bool allow_composition = true;
};

/// Random graph with no induced six-vertex path and no induced bull.
/// Mixes direct rejection sampling (small n) with recursive composition:
/// disjoint unions, joins, and substitutions into small prime graphs of
/// the class, all of which preserve class membership.  Every candidate is
/// certified by the detectors before it is returned; exhausting the
/// attempt budget throws GenerationBudgetError.
Graph random_class_member(int n, Rng& rng, const GenOptions& opts = {});

/// Prime class member on n >= 7 vertices containing the 7-vertex seed
/// (five-cycle 0..4, vertex 5 adjacent to 0 and 3, pendant 6 on 5).
/// Grown by moves proven safe for this family: degree-2 vertices attached
/// to {0, 3} with their own pendants, at most one vertex complete to
/// {0, 1, 2, 3}, at most one bare degree-2 vertex.  The result is
/// re-certified (bull-free, P6-free, prime) before returning.
Graph prime_class_member_with_g7(int n, Rng& rng);

/// Bull-free graph on n >= 7 vertices containing an induced umbrella
/// (5-wheel plus a pendant on the hub).  Starts from the umbrella and adds
/// vertices with random attachments, redrawing any attachment that would
/// create a bull.
Graph bull_free_with_umbrella(int n, Rng& rng, int attempts_per_vertex = 200);

/// Random graph (no class filtering) guaranteed to contain an induced C5:
/// a five-cycle is planted on vertices 0..4 with no chords, every other
/// pair is an edge with the given probability.
Graph random_with_planted_c5(int n, double density, Rng& rng);

}  // namespace stablebull
