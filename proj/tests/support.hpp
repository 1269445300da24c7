#pragma once

// shared brute-force reference implementations, deliberately subset-based
// and independent of the library's own search strategies

#include <algorithm>
#include <utility>
#include <vector>

#include "stablebull/graph.hpp"

namespace testsupport {

using stablebull::Graph;
using stablebull::StableSetSolution;
using stablebull::Vertex;
using stablebull::VertexSet;
using stablebull::Weight;

inline Graph make(int n, std::vector<std::pair<int, int>> edges,
                  std::vector<Weight> weights = {}) {
  return Graph::build(n, edges, std::move(weights));
}

/// Visits every k-element subset of {0..n-1} in lexicographic order until
/// fn returns true; reports whether fn stopped the scan.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (fn(static_cast<const std::vector<int>&>(pick))) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline int induced_edge_count(const Graph& g, const std::vector<int>& vs) {
  int m = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) ++m;
  return m;
}

inline std::vector<int> induced_degrees(const Graph& g, const std::vector<int>& vs) {
  std::vector<int> deg(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && g.adjacent(vs[i], vs[j])) ++deg[i];
  return deg;
}

inline bool induced_connected(const Graph& g, const std::vector<int>& vs) {
  if (vs.empty()) return true;
  std::vector<bool> seen(vs.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (!seen[j] && g.adjacent(vs[i], vs[j])) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == vs.size();
}

/// A 5-vertex induced subgraph is a bull iff it has 5 edges and degree
/// sequence {1,1,2,3,3} (the unique such graph).
inline bool naive_has_bull(const Graph& g) {
  return for_each_subset(g.size(), 5, [&](const std::vector<int>& vs) {
    if (induced_edge_count(g, vs) != 5) return false;
    std::vector<int> deg = induced_degrees(g, vs);
    std::sort(deg.begin(), deg.end());
    return deg == std::vector<int>{1, 1, 2, 3, 3};
  });
}

/// A 6-vertex induced subgraph is a P6 iff it has 5 edges, max degree 2,
/// and is connected (the unique tree with all degrees <= 2).
inline bool naive_has_p6(const Graph& g) {
  return for_each_subset(g.size(), 6, [&](const std::vector<int>& vs) {
    if (induced_edge_count(g, vs) != 5) return false;
    const std::vector<int> deg = induced_degrees(g, vs);
    for (int d : deg)
      if (d > 2) return false;
    return induced_connected(g, vs);
  });
}

/// An induced k-subset is a chordless cycle iff it has k edges and is
/// 2-regular (connectivity follows for k = 5; checked anyway for larger k).
inline bool subset_is_hole(const Graph& g, const std::vector<int>& vs) {
  if (induced_edge_count(g, vs) != static_cast<int>(vs.size())) return false;
  for (int d : induced_degrees(g, vs))
    if (d != 2) return false;
  return induced_connected(g, vs);
}

inline bool naive_has_c5(const Graph& g) {
  return for_each_subset(g.size(), 5,
                         [&](const std::vector<int>& vs) { return subset_is_hole(g, vs); });
}

inline bool naive_has_triangle(const Graph& g) {
  return for_each_subset(g.size(), 3, [&](const std::vector<int>& vs) {
    return induced_edge_count(g, vs) == 3;
  });
}

/// Hub of induced degree 6, a pendant seeing only the hub, and the other
/// five forming a 2-regular ring all adjacent to the hub.
inline bool naive_has_umbrella(const Graph& g) {
  return for_each_subset(g.size(), 7, [&](const std::vector<int>& vs) {
    const std::vector<int> deg = induced_degrees(g, vs);
    for (std::size_t hub = 0; hub < 7; ++hub) {
      if (deg[hub] != 6) continue;
      for (std::size_t pend = 0; pend < 7; ++pend) {
        if (pend == hub || deg[pend] != 1) continue;
        if (!g.adjacent(vs[hub], vs[pend])) continue;
        std::vector<int> ring;
        for (std::size_t i = 0; i < 7; ++i)
          if (i != hub && i != pend) ring.push_back(vs[i]);
        bool ok = subset_is_hole(g, ring);
        for (int r : ring)
          if (!g.adjacent(vs[hub], r)) ok = false;
        if (ok) return true;
      }
    }
    return false;
  });
}

/// Full perfectness check by strong-perfect-graph characterization at desk
/// scale: no odd hole and no odd antihole of any feasible length.
inline bool naive_is_perfect(const Graph& g) {
  const Graph co = g.complement();
  for (int len = 5; len <= g.size(); len += 2) {
    const bool found = for_each_subset(g.size(), len, [&](const std::vector<int>& vs) {
      return subset_is_hole(g, vs) || subset_is_hole(co, vs);
    });
    if (found) return false;
  }
  return true;
}

inline bool naive_is_module(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (s.contains(v)) continue;
    int hits = 0, total = 0;
    for (Vertex u = s.first(); u != -1; u = s.next(u)) {
      ++total;
      if (g.adjacent(v, u)) ++hits;
    }
    if (hits != 0 && hits != total) return false;
  }
  return true;
}

/// Exhaustive maximum-weight stable set with the documented tie-break
/// (highest weight, then lexicographically least ascending vertex list),
/// via its own subset walk.
inline StableSetSolution naive_mwss(const Graph& g) {
  const int n = g.size();
  std::vector<int> best;
  Weight best_weight = 0;
  std::vector<int> cur;
  const auto lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    cur.clear();
    Weight w = 0;
    bool stable = true;
    for (int v = 0; v < n && stable; ++v) {
      if (!((mask >> v) & 1)) continue;
      for (int u : cur)
        if (g.adjacent(u, v)) {
          stable = false;
          break;
        }
      if (stable) {
        cur.push_back(v);
        w += g.weight(v);
      }
    }
    if (!stable) continue;
    if (w > best_weight || (w == best_weight && lex_less(cur, best))) {
      best_weight = w;
      best = cur;
    }
  }
  StableSetSolution out{VertexSet(static_cast<std::size_t>(n)), best_weight};
  for (int v : best) out.vertices.add(v);
  return out;
}

}  // namespace testsupport
