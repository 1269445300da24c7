#include "stablebull/detect.hpp"

#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace stablebull {

namespace {

// Vertices strictly greater than v, as a mask.
VertexSet above(std::size_t universe, Vertex v) {
  VertexSet s = VertexSet::full(universe);
  for (Vertex u = 0; u <= v; ++u) s.remove(u);
  return s;
}

}  // namespace

bool is_induced_c5(const Graph& g, const CycleWitness& w) {
  const int n = g.size();
  for (int i = 0; i < 5; ++i) {
    if (w.c[i] < 0 || w.c[i] >= n) return false;
    for (int j = i + 1; j < 5; ++j) {
      if (w.c[i] == w.c[j]) return false;
      bool want = (j == i + 1) || (i == 0 && j == 4);
      if (g.adjacent(w.c[i], w.c[j]) != want) return false;
    }
  }
  return true;
}

bool for_each_induced_c5(const Graph& g, const VertexSet& allowed,
                         const std::function<bool(const CycleWitness&)>& fn) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  for (Vertex c0 = allowed.first(); c0 != -1; c0 = allowed.next(c0)) {
    VertexSet gt = above(n, c0) & allowed;  // the rest of the cycle sits above c0
    VertexSet cand1 = g.neighbors(c0) & gt;
    for (Vertex c1 = cand1.first(); c1 != -1; c1 = cand1.next(c1)) {
      VertexSet cand2 = (g.neighbors(c1) & gt) - g.neighbors(c0);
      for (Vertex c2 = cand2.first(); c2 != -1; c2 = cand2.next(c2)) {
        VertexSet cand3 = ((g.neighbors(c2) & gt) - g.neighbors(c0)) - g.neighbors(c1);
        for (Vertex c3 = cand3.first(); c3 != -1; c3 = cand3.next(c3)) {
          VertexSet cand4 = ((g.neighbors(c3) & g.neighbors(c0) & gt) - g.neighbors(c1)) -
                            g.neighbors(c2);
          // orientation canonicalization: the cycle and its mirror image are
          // the same witness, keep the one with c1 < c4
          for (Vertex c4 = cand4.first(); c4 != -1; c4 = cand4.next(c4)) {
            if (c4 < c1) continue;
            CycleWitness w{{c0, c1, c2, c3, c4}};
            if (fn(w)) return true;
          }
        }
      }
    }
  }
  return false;
}

std::optional<CycleWitness> find_induced_c5_within(const Graph& g, const VertexSet& allowed) {
  std::optional<CycleWitness> out;
  for_each_induced_c5(g, allowed, [&](const CycleWitness& w) {
    out = w;
    return true;
  });
  return out;
}

std::optional<CycleWitness> find_induced_c5(const Graph& g) {
  return find_induced_c5_within(g, g.vertex_set());
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  const int n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbor_list(u)) {
      if (v <= u) continue;
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      for (Vertex w = common.first(); w != -1; w = common.next(w)) {
        if (w > v) return std::array<Vertex, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::optional<PathWitness> find_induced_path6(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  if (g.size() < 6) return std::nullopt;
  std::array<Vertex, 6> p{};
  // closed[k] = union of closed neighborhoods of p[0..k]; level k+2
  // candidates must avoid closed[k] to keep the path induced
  std::array<VertexSet, 6> closed;
  std::optional<PathWitness> out;

  std::function<bool(int)> extend = [&](int len) -> bool {
    if (len == 6) {
      if (p[0] > p[5]) return false;  // mirror image is canonical
      out = PathWitness{{p.begin(), p.end()}};
      return true;
    }
    VertexSet cand = g.neighbors(p[len - 1]);
    if (len >= 2) cand -= closed[len - 2];
    for (Vertex v = cand.first(); v != -1; v = cand.next(v)) {
      p[len] = v;
      closed[len] = closed[len - 1] | g.neighbors(v);
      closed[len].add(v);
      if (extend(len + 1)) return true;
    }
    return false;
  };

  for (Vertex v0 = 0; v0 < g.size(); ++v0) {
    p[0] = v0;
    closed[0] = g.neighbors(v0);
    closed[0].add(v0);
    (void)n;
    if (extend(1)) return out;
  }
  return std::nullopt;
}

std::optional<BullWitness> find_bull(const Graph& g) {
  const int n = g.size();
  // embed the triangle first (b < c breaks the bull's only symmetry, which
  // swaps b<->c together with the horns a<->d), then the horns
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c : g.neighbor_list(b)) {
      if (c <= b) continue;
      VertexSet apexes = g.neighbors(b) & g.neighbors(c);
      for (Vertex e = apexes.first(); e != -1; e = apexes.next(e)) {
        VertexSet horn_b = (g.neighbors(b) - g.neighbors(c)) - g.neighbors(e);
        horn_b.remove(c);
        horn_b.remove(e);
        for (Vertex a = horn_b.first(); a != -1; a = horn_b.next(a)) {
          VertexSet horn_c = ((g.neighbors(c) - g.neighbors(b)) - g.neighbors(e)) -
                             g.neighbors(a);
          horn_c.remove(b);
          horn_c.remove(e);
          horn_c.remove(a);
          Vertex d = horn_c.first();
          if (d != -1) return BullWitness{a, b, c, d, e};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<UmbrellaWitness> find_umbrella(const Graph& g) {
  const int n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < 6) continue;  // needs the C5 plus a pendant
    std::optional<UmbrellaWitness> out;
    for_each_induced_c5(g, g.neighbors(u), [&](const CycleWitness& w) {
      VertexSet shade = g.neighbors(u);
      for (Vertex ci : w.c) shade -= g.neighbors(ci);
      shade -= w.set(static_cast<std::size_t>(n));
      Vertex y = shade.first();
      if (y == -1) return false;
      out = UmbrellaWitness{w, u, y};
      return true;
    });
    if (out) return out;
  }
  return std::nullopt;
}

namespace {

// Induced cycle of length >= min_len with all vertices inside `allowed`.
// Grows an induced path from its least vertex; a candidate adjacent to the
// start can only ever close the cycle, never sit in the interior.
std::optional<std::vector<Vertex>> find_hole_within(const Graph& g, const VertexSet& allowed,
                                                    int min_len) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  std::vector<Vertex> path;
  // interior.back() = union of closed neighborhoods of path[1..len-2]; the
  // start stays out so that cycle-closing candidates survive the filter
  std::vector<VertexSet> interior;
  std::optional<std::vector<Vertex>> out;

  std::function<bool(const VertexSet&)> extend = [&](const VertexSet& scope) -> bool {
    const Vertex last = path.back();
    const Vertex start = path.front();
    VertexSet cand = (g.neighbors(last) & scope) - interior.back();
    for (Vertex w = cand.first(); w != -1; w = cand.next(w)) {
      // the second path vertex is a neighbor of the start by construction,
      // so adjacency to the start only means closure from the third on
      if (path.size() >= 2 && g.adjacent(w, start)) {
        if (static_cast<int>(path.size()) + 1 >= min_len) {
          path.push_back(w);
          out = path;
          return true;
        }
        continue;  // adjacency to the start would shortcut any longer cycle
      }
      VertexSet closed = interior.back();
      if (path.size() >= 2) {  // `last` turns interior once w is appended
        closed |= g.neighbors(last);
        closed.add(last);
      }
      path.push_back(w);
      interior.push_back(std::move(closed));
      if (extend(scope)) return true;
      interior.pop_back();
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = allowed.first(); s != -1; s = allowed.next(s)) {
    VertexSet scope = above(n, s) & allowed;  // s is the least cycle vertex
    path.assign(1, s);
    interior.assign(1, VertexSet(n));
    if (extend(scope)) return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<WheelWitness> find_wheel(const Graph& g, int k_min) {
  if (k_min < 6) throw std::invalid_argument("find_wheel: k_min must be at least 6");
  const int n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < k_min) continue;
    auto hole = find_hole_within(g, g.neighbors(u), k_min);
    if (hole) return WheelWitness{*hole, u};
  }
  return std::nullopt;
}

NeighborClassification classify_c5_neighbors(const Graph& g, const CycleWitness& cycle) {
  if (!is_induced_c5(g, cycle)) {
    throw std::invalid_argument("classify_c5_neighbors: witness is not an induced C5");
  }
  const int n = g.size();
  NeighborClassification cls;
  cls.cycle = cycle;
  cls.on_cycle = cycle.set(static_cast<std::size_t>(n));
  cls.mask.assign(static_cast<std::size_t>(n), 0);
  cls.k.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (cls.on_cycle.contains(v)) continue;
    std::uint8_t m = 0;
    for (int i = 0; i < 5; ++i) {
      if (g.adjacent(v, cycle.c[i])) m |= static_cast<std::uint8_t>(1u << i);
    }
    cls.mask[v] = m;
    cls.k[v] = std::popcount(m);
    cls.buckets[static_cast<std::size_t>(cls.k[v])].push_back(v);
  }
  return cls;
}

bool is_valid_two_neighbor_mask(std::uint8_t mask) {
  for (int i = 0; i < 5; ++i) {
    std::uint8_t want = static_cast<std::uint8_t>((1u << i) | (1u << ((i + 2) % 5)));
    if (mask == want) return true;
  }
  return false;
}

bool is_valid_three_neighbor_mask(std::uint8_t mask) {
  for (int i = 0; i < 5; ++i) {
    std::uint8_t want = static_cast<std::uint8_t>((1u << i) | (1u << ((i + 1) % 5)) |
                                                  (1u << ((i + 2) % 5)));
    if (mask == want) return true;
  }
  return false;
}

std::vector<NeighborRuleViolation> check_cycle_neighbor_rules(const Graph& g, const CycleWitness& cycle,
                                          const NeighborClassification& cls) {
  std::vector<NeighborRuleViolation> out;
  auto cname = [&](int i) {
    std::ostringstream os;
    os << "c" << (i + 1) << "=" << cycle.c[i];
    return os.str();
  };

  for (Vertex v : cls.buckets[2]) {
    if (!is_valid_two_neighbor_mask(cls.mask[v])) {
      std::ostringstream os;
      os << "2-neighbor " << v << " attaches to an adjacent cycle pair";
      out.push_back({1, {v}, os.str()});
    }
  }
  for (Vertex v : cls.buckets[3]) {
    if (!is_valid_three_neighbor_mask(cls.mask[v])) {
      std::ostringstream os;
      os << "3-neighbor " << v << " attachment is not three consecutive cycle vertices";
      out.push_back({2, {v}, os.str()});
    }
  }
  for (Vertex u : cls.buckets[5]) {
    for (int kk = 1; kk <= 2; ++kk) {
      for (Vertex v : cls.buckets[static_cast<std::size_t>(kk)]) {
        if (!g.adjacent(u, v)) {
          std::ostringstream os;
          os << "5-neighbor " << u << " misses " << kk << "-neighbor " << v;
          out.push_back({3, {u, v}, os.str()});
        }
      }
    }
  }
  for (Vertex f : cls.buckets[4]) {
    int miss = -1;
    for (int i = 0; i < 5; ++i) {
      if (!(cls.mask[f] & (1u << i))) miss = i;
    }
    for (Vertex u : cls.buckets[1]) {
      if (!(cls.mask[u] & (1u << miss))) {
        std::ostringstream os;
        os << "4-neighbor " << f << " misses " << cname(miss) << " but 1-neighbor " << u
           << " is not attached there";
        out.push_back({4, {f, u}, os.str()});
      }
    }
  }
  for (Vertex z : cls.buckets[0]) {
    for (Vertex y : g.neighbor_list(z)) {
      if (cls.k[y] == 3 || cls.k[y] == 4) {
        std::ostringstream os;
        os << "non-neighbor " << z << " touches " << cls.k[y] << "-neighbor " << y;
        out.push_back({5, {z, y}, os.str()});
      }
    }
  }
  return out;
}

}  // namespace stablebull
