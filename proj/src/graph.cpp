#include "stablebull/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace stablebull {

bool better_solution(const StableSetSolution& a, const StableSetSolution& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  std::vector<Vertex> av = a.vertices.to_vector();
  std::vector<Vertex> bv = b.vertices.to_vector();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

Graph Graph::build(int n, std::span<const std::pair<int, int>> edges,
                   std::vector<Weight> weights, std::vector<std::string> labels) {
  if (n < 0) throw GraphError(GraphErrorKind::endpoint_out_of_range, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  g.lists_.assign(static_cast<std::size_t>(n), {});

  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "edge endpoint out of range: (" << u << ", " << v << ") with n = " << n;
      throw GraphError(GraphErrorKind::endpoint_out_of_range, os.str());
    }
    if (u == v) {
      std::ostringstream os;
      os << "loop edge at vertex " << u;
      throw GraphError(GraphErrorKind::loop_edge, os.str());
    }
    if (g.adj_[u].contains(v)) {
      std::ostringstream os;
      os << "duplicate edge (" << u << ", " << v << ")";
      throw GraphError(GraphErrorKind::duplicate_edge, os.str());
    }
    g.adj_[u].add(v);
    g.adj_[v].add(u);
    ++g.m_;
  }
  for (Vertex v = 0; v < n; ++v) {
    g.lists_[v] = g.adj_[v].to_vector();
  }

  if (weights.empty()) {
    g.weights_.assign(static_cast<std::size_t>(n), 1);
  } else {
    if (static_cast<int>(weights.size()) != n) {
      std::ostringstream os;
      os << "weight vector has " << weights.size() << " entries for " << n << " vertices";
      throw GraphError(GraphErrorKind::weight_count_mismatch, os.str());
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 0) {
        std::ostringstream os;
        os << "negative weight " << weights[i] << " at vertex " << i;
        throw GraphError(GraphErrorKind::negative_weight, os.str());
      }
    }
    g.weights_ = std::move(weights);
  }

  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    std::ostringstream os;
    os << "label vector has " << labels.size() << " entries for " << n << " vertices";
    throw GraphError(GraphErrorKind::label_count_mismatch, os.str());
  }
  g.labels_ = std::move(labels);
  return g;
}

VertexSet Graph::non_neighborhood(Vertex v) const {
  VertexSet s = adj_[v].complement_set();
  s.remove(v);
  return s;
}

Weight Graph::weight_of(const VertexSet& s) const {
  Weight total = 0;
  for (Vertex v = s.first(); v != -1; v = s.next(v)) total += weights_[v];
  return total;
}

std::string Graph::label(Vertex v) const {
  if (!labels_.empty()) return labels_[v];
  return std::to_string(v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : lists_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedSubgraph Graph::induced_subgraph(const VertexSet& s) const {
  InducedSubgraph out;
  out.original = s.to_vector();
  const int k = static_cast<int>(out.original.size());
  std::vector<int> to_new(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < k; ++i) to_new[out.original[i]] = i;

  std::vector<std::pair<int, int>> sub_edges;
  std::vector<Weight> sub_weights(static_cast<std::size_t>(k));
  std::vector<std::string> sub_labels;
  if (!labels_.empty()) sub_labels.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Vertex u = out.original[i];
    sub_weights[i] = weights_[u];
    if (!labels_.empty()) sub_labels[i] = labels_[u];
    for (Vertex v : lists_[u]) {
      if (v > u && s.contains(v)) sub_edges.emplace_back(i, to_new[v]);
    }
  }
  out.graph = Graph::build(k, sub_edges, std::move(sub_weights), std::move(sub_labels));
  return out;
}

std::vector<VertexSet> Graph::components() const {
  return components_within(vertex_set());
}

std::vector<VertexSet> Graph::components_within(const VertexSet& allowed) const {
  std::vector<VertexSet> comps;
  VertexSet seen(static_cast<std::size_t>(n_));
  for (Vertex s = allowed.first(); s != -1; s = allowed.next(s)) {
    if (seen.contains(s)) continue;
    VertexSet comp(static_cast<std::size_t>(n_));
    std::vector<Vertex> stack{s};
    comp.add(s);
    seen.add(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      VertexSet fresh = adj_[u] & allowed;
      fresh -= comp;
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

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> comp_edges;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adj_[u].contains(v)) comp_edges.emplace_back(u, v);
    }
  }
  return Graph::build(n_, comp_edges, weights_, labels_);
}

bool Graph::is_clique(const VertexSet& s) const {
  for (Vertex v = s.first(); v != -1; v = s.next(v)) {
    VertexSet missing = s - adj_[v];
    missing.remove(v);
    if (!missing.empty()) return false;
  }
  return true;
}

bool Graph::is_stable(const VertexSet& s) const {
  for (Vertex v = s.first(); v != -1; v = s.next(v)) {
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

bool Graph::is_triangle_free() const {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : lists_[u]) {
      if (v <= u) continue;
      VertexSet common = adj_[u] & adj_[v];
      if (!common.empty()) return false;
    }
  }
  return true;
}

Graph Graph::with_weights(std::vector<Weight> weights) const {
  return Graph::build(n_, edges(), std::move(weights), labels_);
}

bool Graph::verify_solution(const StableSetSolution& sol) const {
  if (static_cast<int>(sol.vertices.universe()) != n_) return false;
  if (!is_stable(sol.vertices)) return false;
  return weight_of(sol.vertices) == sol.weight;
}

}  // namespace stablebull
