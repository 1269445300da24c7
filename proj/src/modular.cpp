#include "stablebull/modular.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace stablebull {

namespace {

// Splitter closure of `seed` inside the subgraph induced by `scope`: the
// smallest module of g[scope] containing the seed.
VertexSet closure_within(const Graph& g, const VertexSet& scope, VertexSet seed) {
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet outside = scope - seed;
    for (Vertex w = outside.first(); w != -1; w = outside.next(w)) {
      VertexSet inside = g.neighbors(w) & seed;
      if (inside.empty()) continue;
      if (inside.count() == seed.count()) continue;  // complete to the seed
      seed.add(w);
      changed = true;
    }
  }
  return seed;
}

bool is_module_within(const Graph& g, const VertexSet& scope, const VertexSet& s) {
  VertexSet outside = scope - s;
  const std::size_t size = s.count();
  for (Vertex w = outside.first(); w != -1; w = outside.next(w)) {
    VertexSet inside = g.neighbors(w) & s;
    if (!inside.empty() && inside.count() != size) return false;
  }
  return true;
}

// Components of g[scope], ordered by smallest vertex.
std::vector<VertexSet> components_in(const Graph& g, const VertexSet& scope) {
  return g.components_within(scope);
}

// Co-components of g[scope]: components of the complemented subgraph,
// computed against complemented adjacency rows without materializing it.
std::vector<VertexSet> co_components_in(const Graph& g, const VertexSet& scope) {
  std::vector<VertexSet> comps;
  VertexSet seen(static_cast<std::size_t>(g.size()));
  for (Vertex s = scope.first(); s != -1; s = scope.next(s)) {
    if (seen.contains(s)) continue;
    VertexSet comp(static_cast<std::size_t>(g.size()));
    std::vector<Vertex> stack{s};
    comp.add(s);
    seen.add(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      VertexSet fresh = (scope - g.neighbors(u)) - comp;
      fresh.remove(u);
      for (Vertex v = fresh.first(); v != -1; v = fresh.next(v)) {
        comp.add(v);
        seen.add(v);
        stack.push_back(v);
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

bool is_module(const Graph& g, const VertexSet& s) {
  return is_module_within(g, g.vertex_set(), s);
}

VertexSet smallest_module_containing(const Graph& g, Vertex u, Vertex v) {
  const int n = g.size();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
    throw std::invalid_argument("smallest_module_containing: need two distinct vertices of g");
  }
  VertexSet seed(static_cast<std::size_t>(n));
  seed.add(u);
  seed.add(v);
  return closure_within(g, g.vertex_set(), seed);
}

std::optional<VertexSet> find_proper_homogeneous_set(const Graph& g) {
  const int n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet m = smallest_module_containing(g, u, v);
      if (static_cast<int>(m.count()) < n) return m;
    }
  }
  return std::nullopt;
}

bool is_prime(const Graph& g) {
  return !find_proper_homogeneous_set(g).has_value();
}

namespace {

// In a connected, co-connected subgraph the maximal proper modules partition
// the vertex set (Gallai), and the maximal one containing v is exactly
// {v} + every u whose pair closure with v stays proper.
VertexSet maximal_proper_module_at(const Graph& g, const VertexSet& scope, Vertex v) {
  const std::size_t total = scope.count();
  VertexSet m(static_cast<std::size_t>(g.size()));
  m.add(v);
  for (Vertex u = scope.first(); u != -1; u = scope.next(u)) {
    if (u == v) continue;
    VertexSet seed(static_cast<std::size_t>(g.size()));
    seed.add(v);
    seed.add(u);
    if (closure_within(g, scope, seed).count() < total) m.add(u);
  }
  return m;
}

int build_rec(const Graph& g, const VertexSet& scope, MDTree& tree) {
  const int id = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  tree.nodes[id].members = scope;

  if (scope.count() == 1) {
    tree.nodes[id].kind = MDNode::Kind::leaf;
    tree.nodes[id].vertex = scope.first();
    return id;
  }

  std::vector<VertexSet> parts = components_in(g, scope);
  MDNode::Kind kind = MDNode::Kind::parallel;
  if (parts.size() == 1) {
    parts = co_components_in(g, scope);
    kind = MDNode::Kind::series;
  }
  if (parts.size() == 1) {
    kind = MDNode::Kind::prime;
    parts.clear();
    VertexSet unassigned = scope;
    while (!unassigned.empty()) {
      Vertex v = unassigned.first();
      VertexSet part = maximal_proper_module_at(g, scope, v);
      if (!is_module_within(g, scope, part) || part.count() == scope.count() ||
          !part.is_subset_of(unassigned)) {
        throw std::logic_error("build_md_tree: module partition failed");
      }
      unassigned -= part;
      parts.push_back(std::move(part));
    }
  }

  tree.nodes[id].kind = kind;
  for (const VertexSet& part : parts) {
    int child = build_rec(g, part, tree);
    tree.nodes[id].children.push_back(child);
    if (kind == MDNode::Kind::prime) {
      tree.nodes[id].representatives.push_back(part.first());
    }
  }
  return id;
}

void to_text_rec(const MDTree& tree, int id, int depth, std::ostringstream& os) {
  const MDNode& node = tree[id];
  for (int i = 0; i < depth; ++i) os << "  ";
  switch (node.kind) {
    case MDNode::Kind::leaf:
      os << "leaf " << node.vertex << "\n";
      return;
    case MDNode::Kind::series:
      os << "series";
      break;
    case MDNode::Kind::parallel:
      os << "parallel";
      break;
    case MDNode::Kind::prime:
      os << "prime";
      break;
  }
  os << " {";
  bool first = true;
  for (Vertex v = node.members.first(); v != -1; v = node.members.next(v)) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}\n";
  for (int child : node.children) to_text_rec(tree, child, depth + 1, os);
}

}  // namespace

std::string MDTree::to_text() const {
  std::ostringstream os;
  to_text_rec(*this, root, 0, os);
  return os.str();
}

MDTree build_md_tree(const Graph& g) {
  if (g.size() < 1) throw std::invalid_argument("build_md_tree: graph must be nonempty");
  MDTree tree;
  build_rec(g, g.vertex_set(), tree);
  return tree;
}

namespace {

StableSetSolution solve_node(const Graph& g, const MDTree& tree, int id,
                             const PrimeSolver& prime_solver) {
  const MDNode& node = tree[id];
  const std::size_t n = static_cast<std::size_t>(g.size());
  switch (node.kind) {
    case MDNode::Kind::leaf: {
      StableSetSolution sol{VertexSet(n), g.weight(node.vertex)};
      sol.vertices.add(node.vertex);
      return sol;
    }
    case MDNode::Kind::parallel: {
      StableSetSolution sol{VertexSet(n), 0};
      for (int child : node.children) {
        StableSetSolution part = solve_node(g, tree, child, prime_solver);
        sol.vertices |= part.vertices;
        sol.weight += part.weight;
      }
      return sol;
    }
    case MDNode::Kind::series: {
      StableSetSolution best;
      bool have = false;
      for (int child : node.children) {
        StableSetSolution part = solve_node(g, tree, child, prime_solver);
        if (!have || better_solution(part, best)) {
          best = std::move(part);
          have = true;
        }
      }
      return best;
    }
    case MDNode::Kind::prime: {
      const int b = static_cast<int>(node.children.size());
      std::vector<StableSetSolution> child_sols;
      child_sols.reserve(static_cast<std::size_t>(b));
      std::vector<Weight> quot_weights(static_cast<std::size_t>(b));
      for (int i = 0; i < b; ++i) {
        child_sols.push_back(solve_node(g, tree, node.children[i], prime_solver));
        quot_weights[static_cast<std::size_t>(i)] = child_sols.back().weight;
      }
      // quotient adjacency: modules are pairwise complete or anticomplete,
      // so any single representative pair decides each edge
      std::vector<std::pair<int, int>> quot_edges;
      for (int i = 0; i < b; ++i) {
        for (int j = i + 1; j < b; ++j) {
          if (g.adjacent(node.representatives[i], node.representatives[j])) {
            quot_edges.emplace_back(i, j);
          }
        }
      }
      // label quotient vertices by their representative so traces and
      // decompositions printed downstream still name host vertices
      std::vector<std::string> quot_labels;
      quot_labels.reserve(static_cast<std::size_t>(b));
      for (int i = 0; i < b; ++i) quot_labels.push_back(g.label(node.representatives[i]));
      Graph quotient = Graph::build(b, quot_edges, quot_weights, std::move(quot_labels));
      StableSetSolution picked = prime_solver(quotient);
      if (!quotient.verify_solution(picked)) {
        throw std::logic_error("mwss_via_md: prime solver returned an invalid solution");
      }
      StableSetSolution sol{VertexSet(n), 0};
      for (Vertex i = picked.vertices.first(); i != -1; i = picked.vertices.next(i)) {
        sol.vertices |= child_sols[static_cast<std::size_t>(i)].vertices;
        sol.weight += child_sols[static_cast<std::size_t>(i)].weight;
      }
      return sol;
    }
  }
  throw std::logic_error("mwss_via_md: unreachable");
}

}  // namespace

StableSetSolution mwss_via_md(const Graph& g, const PrimeSolver& prime_solver) {
  if (g.size() == 0) return StableSetSolution{VertexSet(0), 0};
  MDTree tree = build_md_tree(g);
  StableSetSolution sol = solve_node(g, tree, tree.root, prime_solver);
  if (!g.verify_solution(sol)) {
    throw std::logic_error("mwss_via_md: produced an invalid solution");
  }
  return sol;
}

}  // namespace stablebull
