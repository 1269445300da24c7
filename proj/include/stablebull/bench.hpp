#pragma once

#include <cstdint>
#include <vector>

#include "stablebull/graph.hpp"

namespace stablebull {

struct StructureBenchRow {
  int n = 0;
  int reps = 0;
  double extract_ms = 0.0;   // witness search + clause checks + partition
  double triangle_ms = 0.0;  // certifying that the rest is triangle-free
};

/// Times the structure-extraction pipeline on grown instances of the bench
/// family (cycle plus attachment pairs, one big non-neighborhood
/// component).  Each size is repeated until at least 20ms of wall time has
/// accumulated and the mean per-run cost is reported.  The clause checks
/// scale quadratically, the triangle certificate is measured separately
/// because it carries the n*m term.
std::vector<StructureBenchRow> run_structure_bench(const std::vector<int>& sizes,
                                                   std::uint64_t seed);

}  // namespace stablebull
