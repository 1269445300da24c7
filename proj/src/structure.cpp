#include "stablebull/structure.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <sstream>

namespace stablebull {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::bull_found: return "bull";
    case ViolationKind::p6_found: return "p6";
    case ViolationKind::homogeneous_set_found: return "homogeneous-set";
    case ViolationKind::three_neighbor_present: return "three-neighbor";
    case ViolationKind::five_neighbor_present: return "five-neighbor";
    case ViolationKind::four_neighbor_attachment: return "four-neighbor-attachment";
    case ViolationKind::f_attachment: return "f-attachment";
    case ViolationKind::f_not_clique: return "f-not-clique";
    case ViolationKind::triangle_outside_f: return "triangle-outside-f";
  }
  return "unknown";
}

std::string Violation::to_text() const {
  std::ostringstream os;
  os << "class violation [" << violation_kind_name(kind) << "]";
  if (!vertices.empty()) {
    os << " vertices {";
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
    os << "}";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

namespace {

[[noreturn]] void raise(ViolationKind kind, std::vector<Vertex> vertices, std::string detail) {
  throw ClassViolationError(Violation{kind, std::move(vertices), std::move(detail)});
}

// The five vertices must induce a bull with roles (a,b,c,d,e); used to make
// sure constructed certificates are genuine before they are thrown.
bool is_bull(const Graph& g, const BullWitness& w) {
  const std::array<Vertex, 5> vs = w.vertices();
  for (std::size_t i = 0; i < 5; ++i) {
    if (vs[i] < 0 || vs[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  auto adj = [&](Vertex u, Vertex v) { return g.adjacent(u, v); };
  return adj(w.a, w.b) && adj(w.b, w.c) && adj(w.c, w.d) && adj(w.b, w.e) && adj(w.c, w.e) &&
         !adj(w.a, w.c) && !adj(w.a, w.d) && !adj(w.a, w.e) && !adj(w.b, w.d) && !adj(w.d, w.e);
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

[[noreturn]] void raise_bull(const Graph& g, const BullWitness& w, const std::string& detail) {
  if (!is_bull(g, w)) throw std::logic_error("structure: constructed bull certificate is wrong");
  raise(ViolationKind::bull_found, {w.a, w.b, w.c, w.d, w.e}, detail);
}

[[noreturn]] void raise_p6(const Graph& g, const std::vector<Vertex>& p, const std::string& detail) {
  if (p.size() != 6 || !is_induced_path(g, p)) {
    throw std::logic_error("structure: constructed p6 certificate is wrong");
  }
  raise(ViolationKind::p6_found, p, detail);
}

}  // namespace

void verify_g7_witness(const Graph& g, const G7Witness& w) {
  if (!is_induced_c5(g, w.cycle)) {
    throw std::invalid_argument("g7 witness: cycle is not an induced C5");
  }
  const int n = g.size();
  if (w.d < 0 || w.d >= n || w.x < 0 || w.x >= n || w.d == w.x || w.cycle.contains(w.d) ||
      w.cycle.contains(w.x)) {
    throw std::invalid_argument("g7 witness: d and x must be distinct non-cycle vertices");
  }
  if (!g.adjacent(w.d, w.x)) throw std::invalid_argument("g7 witness: d and x must be adjacent");
  for (int i = 0; i < 5; ++i) {
    bool want_d = (i == 0 || i == 3);
    if (g.adjacent(w.d, w.cycle.c[i]) != want_d) {
      throw std::invalid_argument("g7 witness: d must attach exactly to cycle[0] and cycle[3]");
    }
    if (g.adjacent(w.x, w.cycle.c[i])) {
      throw std::invalid_argument("g7 witness: x must be anticomplete to the cycle");
    }
  }
}

HomogeneousSetCertificate homogeneous_set_from_umbrella(const Graph& g,
                                                        const UmbrellaWitness& umbrella) {
  const int n = g.size();
  const CycleWitness& cyc = umbrella.cycle;
  if (!is_induced_c5(g, cyc)) {
    throw std::invalid_argument("umbrella witness: cycle is not an induced C5");
  }
  const Vertex u = umbrella.center;
  const Vertex y = umbrella.pendant;
  if (u < 0 || u >= n || y < 0 || y >= n || u == y || cyc.contains(u) || cyc.contains(y)) {
    throw std::invalid_argument("umbrella witness: center/pendant must be distinct non-cycle vertices");
  }
  if (!g.adjacent(u, y)) throw std::invalid_argument("umbrella witness: pendant must touch the center");
  for (Vertex ci : cyc.c) {
    if (!g.adjacent(u, ci)) throw std::invalid_argument("umbrella witness: center not complete to cycle");
    if (g.adjacent(y, ci)) throw std::invalid_argument("umbrella witness: pendant not anticomplete to cycle");
  }

  HomogeneousSetCertificate cert;
  const VertexSet on_cycle = cyc.set(static_cast<std::size_t>(n));
  cert.a = VertexSet(static_cast<std::size_t>(n));
  cert.z = VertexSet(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (on_cycle.contains(v)) continue;
    int hits = 0;
    for (Vertex ci : cyc.c) hits += g.adjacent(v, ci) ? 1 : 0;
    if (hits == 5) cert.a.add(v);
    if (hits == 0) cert.z.add(v);
  }
  cert.a_prime = VertexSet(static_cast<std::size_t>(n));
  for (Vertex a = cert.a.first(); a != -1; a = cert.a.next(a)) {
    if (g.neighbors(a).intersects(cert.z)) cert.a_prime.add(a);
  }
  cert.a_second = VertexSet(static_cast<std::size_t>(n));
  for (Vertex a = cert.a.first(); a != -1; a = cert.a.next(a)) {
    if (cert.a_prime.contains(a)) continue;
    VertexSet missed = cert.a_prime - g.neighbors(a);
    if (!missed.empty()) cert.a_second.add(a);
  }
  assert(cert.a_prime.contains(u));  // the pendant guarantees A' is nonempty

  VertexSet cut = cert.a_prime | cert.a_second;
  VertexSet rest = g.vertex_set() - cut;
  cert.h = VertexSet(static_cast<std::size_t>(n));
  for (const VertexSet& comp : g.components_within(rest)) {
    if (comp.contains(cyc.c[0])) {
      cert.h = comp;
      break;
    }
  }

  // Homogeneity of h: the cut is complete to it, the remainder is separated
  // from it by construction.  A miss here certifies a bull somewhere in g.
  for (Vertex b = cut.first(); b != -1; b = cut.next(b)) {
    VertexSet missed = cert.h - g.neighbors(b);
    if (!missed.empty()) {
      auto bull = find_bull(g);
      if (!bull) throw std::logic_error("umbrella certificate failed on a bull-free graph");
      raise_bull(g, *bull, "umbrella homogeneous set construction hit a non-complete cut vertex");
    }
  }
  if (cert.h.count() == static_cast<std::size_t>(n) || cert.h.count() < 2) {
    throw std::logic_error("umbrella certificate produced a non-proper set");
  }
  return cert;
}

namespace {

std::uint8_t cycle_mask_of(const Graph& g, const CycleWitness& cycle, Vertex v) {
  std::uint8_t m = 0;
  for (int i = 0; i < 5; ++i) {
    if (g.adjacent(v, cycle.c[i])) m |= static_cast<std::uint8_t>(1u << i);
  }
  return m;
}

}  // namespace

G7Witness find_g7_witness(const Graph& g, Vertex x, const CycleWitness& cycle) {
  const int n = g.size();
  if (!is_induced_c5(g, cycle)) {
    throw std::invalid_argument("find_g7_witness: cycle is not an induced C5");
  }
  if (x < 0 || x >= n || cycle.contains(x)) {
    throw std::invalid_argument("find_g7_witness: x must be a non-cycle vertex");
  }
  if (cycle_mask_of(g, cycle, x) != 0) {
    throw std::invalid_argument("find_g7_witness: x must be anticomplete to the cycle");
  }

  // shortest path from the cycle to x, layer by layer
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue;
  for (Vertex ci : cycle.c) {
    dist[ci] = 0;
    queue.push_back(ci);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbor_list(v)) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[x] == -1) {
    // x cannot even reach the cycle, so the graph is disconnected and not
    // prime; certify with x's component, or with everything else when that
    // component is a single vertex (a proper set needs at least two)
    VertexSet comp(static_cast<std::size_t>(n));
    for (const VertexSet& c : g.components()) {
      if (c.contains(x)) comp = c;
    }
    if (comp.count() < 2) comp = g.vertex_set() - comp;
    raise(ViolationKind::homogeneous_set_found, comp.to_vector(),
          "x is disconnected from the cycle; a component side is a proper homogeneous set");
  }

  std::vector<Vertex> path{x};  // built backwards: x = layer dist[x], ..., layer 0
  while (dist[path.back()] > 0) {
    Vertex cur = path.back();
    Vertex best = -1;
    for (Vertex w : g.neighbor_list(cur)) {
      if (dist[w] == dist[cur] - 1 && (best == -1 || w < best)) best = w;
    }
    path.push_back(best);
  }
  std::reverse(path.begin(), path.end());  // path[0] on the cycle, path.back() = x

  const Vertex d = path[1];
  const Vertex z = path[2];  // first genuine non-neighbor along the path (= x when p = 2)
  const std::uint8_t mask = cycle_mask_of(g, cycle, d);
  const int k = std::popcount(mask);

  if (k == 1) {
    int i = std::countr_zero(mask);
    std::vector<Vertex> p6{z, d, cycle.c[i], cycle.c[(i + 1) % 5], cycle.c[(i + 2) % 5],
                           cycle.c[(i + 3) % 5]};
    raise_p6(g, p6, "a 1-neighbor of the cycle touches a cycle non-neighbor");
  }
  if (k == 3 || k == 4 || (k == 2 && !is_valid_two_neighbor_mask(mask))) {
    // two consecutive attachments followed by a miss always exist here and
    // close a bull with the path vertex behind d
    for (int i = 0; i < 5; ++i) {
      bool hit_i = mask & (1u << i);
      bool hit_n = mask & (1u << ((i + 1) % 5));
      bool miss = !(mask & (1u << ((i + 2) % 5)));
      if (hit_i && hit_n && miss) {
        BullWitness bull{z, d, cycle.c[(i + 1) % 5], cycle.c[(i + 2) % 5], cycle.c[i]};
        raise_bull(g, bull, "cycle attachment of the path vertex next to the cycle is malformed");
      }
    }
    throw std::logic_error("find_g7_witness: attachment case analysis missed a mask");
  }
  if (k == 5) {
    // d is a center and z its pendant: an umbrella, hence a homogeneous set
    UmbrellaWitness umb{cycle, d, z};
    HomogeneousSetCertificate cert = homogeneous_set_from_umbrella(g, umb);
    raise(ViolationKind::homogeneous_set_found, cert.h.to_vector(),
          "umbrella centered on the path vertex next to the cycle yields a proper homogeneous set");
  }

  // k == 2 with a legal {c[i], c[i+2]} attachment; relabel so d sits on
  // cycle[0] and cycle[3].  Walking the cycle in either direction gives two
  // candidate labelings; keep the lexicographically least.
  int i = 0;
  while (!((mask & (1u << i)) && (mask & (1u << ((i + 2) % 5))))) ++i;
  const auto& c = cycle.c;
  std::array<Vertex, 5> fwd{c[(i + 2) % 5], c[(i + 3) % 5], c[(i + 4) % 5], c[i], c[(i + 1) % 5]};
  std::array<Vertex, 5> bwd{c[i], c[(i + 4) % 5], c[(i + 3) % 5], c[(i + 2) % 5], c[(i + 1) % 5]};
  CycleWitness relabeled{std::min(fwd, bwd)};

  if (dist[x] > 2) {
    std::vector<Vertex> p6{path[3], path[2], path[1], relabeled.c[0], relabeled.c[1],
                           relabeled.c[2]};
    raise_p6(g, p6, "shortest path from the cycle to x has more than one interior layer");
  }

  G7Witness w{relabeled, d, x};
  verify_g7_witness(g, w);
  return w;
}

StructurePartition extract_structure_partition(const Graph& g, const G7Witness& w,
                                               const ExtractOptions& opts) {
  verify_g7_witness(g, w);
  const std::size_t n = static_cast<std::size_t>(g.size());
  NeighborClassification cls = classify_c5_neighbors(g, w.cycle);

  if (!cls.buckets[3].empty()) {
    Vertex v = cls.buckets[3].front();
    raise(ViolationKind::three_neighbor_present, {v},
          "the cycle of a G7 witness admits no 3-neighbors");
  }
  if (!cls.buckets[5].empty()) {
    Vertex v = cls.buckets[5].front();
    raise(ViolationKind::five_neighbor_present, {v},
          "the cycle of a G7 witness admits no 5-neighbors");
  }

  StructurePartition part;
  part.cycle = w.cycle;
  part.c_set = w.cycle.set(n);
  part.f = VertexSet(n);
  part.t = VertexSet(n);
  part.w = VertexSet(n);
  for (Vertex v : cls.buckets[4]) part.f.add(v);
  for (Vertex v : cls.buckets[2]) part.t.add(v);
  for (Vertex v : cls.buckets[0]) part.w.add(v);
  for (Vertex v : cls.buckets[1]) part.w.add(v);

  for (Vertex f = part.f.first(); f != -1; f = part.f.next(f)) {
    if (cls.mask[f] != 0b01111) {
      raise(ViolationKind::four_neighbor_attachment, {f},
            "4-neighbors must attach to cycle[0..3] and miss cycle[4]");
    }
    if (g.adjacent(f, w.x)) {
      raise(ViolationKind::f_attachment, {f, w.x}, "4-neighbors must avoid x");
    }
    if (g.adjacent(f, w.d)) {
      raise(ViolationKind::f_attachment, {f, w.d}, "4-neighbors must avoid d");
    }
  }
  for (Vertex f1 = part.f.first(); f1 != -1; f1 = part.f.next(f1)) {
    for (Vertex f2 = part.f.next(f1); f2 != -1; f2 = part.f.next(f2)) {
      if (!g.adjacent(f1, f2)) {
        raise(ViolationKind::f_not_clique, {f1, f2}, "the 4-neighbors must form a clique");
      }
    }
  }

  if (opts.verify_triangle_free) {
    InducedSubgraph rest = g.induced_subgraph(g.vertex_set() - part.f);
    if (auto tri = find_triangle(rest.graph)) {
      std::vector<Vertex> host{rest.original[(*tri)[0]], rest.original[(*tri)[1]],
                               rest.original[(*tri)[2]]};
      raise(ViolationKind::triangle_outside_f, host,
            "removing the 4-neighbor clique must leave a triangle-free graph");
    }
  }
  return part;
}

StructureResult find_triangle_free_clique(const Graph& g, Vertex x, const CycleWitness& cycle,
                                          const ExtractOptions& opts) {
  G7Witness w = find_g7_witness(g, x, cycle);
  StructurePartition part = extract_structure_partition(g, w, opts);
  return StructureResult{w, part};
}

StructureResult find_triangle_free_clique(const Graph& g, Vertex x, const ExtractOptions& opts) {
  if (x < 0 || x >= g.size()) {
    throw std::invalid_argument("find_triangle_free_clique: x out of range");
  }
  auto cycle = find_induced_c5_within(g, g.non_neighborhood(x));
  if (!cycle) {
    throw std::invalid_argument("find_triangle_free_clique: no induced C5 anticomplete to x");
  }
  return find_triangle_free_clique(g, x, *cycle, opts);
}

}  // namespace stablebull
