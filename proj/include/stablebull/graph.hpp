#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stablebull {

using Vertex = int;
using Weight = std::int64_t;

enum class GraphErrorKind {
  endpoint_out_of_range,
  loop_edge,
  duplicate_edge,
  weight_count_mismatch,
  negative_weight,
  label_count_mismatch,
};

/// Input validation failure while building a graph (bad edge list, bad
/// weight vector, ...).  Distinct from class-violation certificates: this
/// means the input was not a well-formed graph document at all.
class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Subset of {0..n-1} for a fixed universe size n, stored as a bitset.
/// All set algebra is O(n/64).  Iteration:
///   for (Vertex v = s.first(); v != -1; v = s.next(v)) ...
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : bits_(universe) {
    for (Vertex v : vs) add(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const { return bits_.test(static_cast<std::size_t>(v)); }

  void add(Vertex v) { bits_.set(static_cast<std::size_t>(v)); }
  void remove(Vertex v) { bits_.reset(static_cast<std::size_t>(v)); }
  void clear() { bits_.reset(); }

  Vertex first() const { return from_pos(bits_.find_first()); }
  Vertex next(Vertex after) const {
    return from_pos(bits_.find_next(static_cast<std::size_t>(after)));
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
  bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }

  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement_set() const {
    VertexSet s(*this);
    s.bits_.flip();
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return a.bits_ != b.bits_; }

 private:
  static Vertex from_pos(std::size_t pos) {
    return pos == boost::dynamic_bitset<>::npos ? -1 : static_cast<Vertex>(pos);
  }
  boost::dynamic_bitset<> bits_;
};

/// A stable (independent) set together with its total weight.
struct StableSetSolution {
  VertexSet vertices;
  Weight weight = 0;
};

/// Strictly-better ordering used everywhere a tie must be broken:
/// higher weight wins, equal weight falls back to the lexicographically
/// least ascending vertex sequence (prefix compares less).
bool better_solution(const StableSetSolution& a, const StableSetSolution& b);

struct InducedSubgraph;

/// Immutable undirected graph with dense 0-based vertex ids, adjacency kept
/// both as per-vertex bitsets (fast set algebra) and sorted lists (fast
/// sparse iteration).  Weights are nonnegative integers, default 1.
/// External names live in an optional label side table.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds.  Throws GraphError on: endpoint out of range,
  /// loop edge, duplicate edge (either orientation), weight/label vector
  /// size mismatch, negative weight.  Empty weights mean unit weights.
  static Graph build(int n, std::span<const std::pair<int, int>> edges,
                     std::vector<Weight> weights = {},
                     std::vector<std::string> labels = {});

  int size() const { return n_; }
  std::size_t edge_count() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  const std::vector<Vertex>& neighbor_list(Vertex v) const { return lists_[v]; }
  int degree(Vertex v) const { return static_cast<int>(lists_[v].size()); }

  /// V \ ({v} u N(v)): everything v could join in a stable set.
  VertexSet non_neighborhood(Vertex v) const;

  Weight weight(Vertex v) const { return weights_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight_of(const VertexSet& s) const;

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  /// The label if present, otherwise the decimal vertex id.
  std::string label(Vertex v) const;

  /// Edges as ascending (u, v) pairs with u < v.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  VertexSet vertex_set() const { return VertexSet::full(static_cast<std::size_t>(n_)); }

  /// Induced subgraph on s; vertices are renumbered 0..|s|-1 in ascending
  /// host-id order and the mapping back is returned alongside.
  InducedSubgraph induced_subgraph(const VertexSet& s) const;

  /// Connected components, ordered by smallest contained vertex id.
  std::vector<VertexSet> components() const;
  /// Components of the subgraph induced by `allowed`, same ordering.
  std::vector<VertexSet> components_within(const VertexSet& allowed) const;

  Graph complement() const;

  bool is_clique(const VertexSet& s) const;
  bool is_stable(const VertexSet& s) const;
  bool is_triangle_free() const;

  /// Same graph with the weight vector replaced (validated like build).
  Graph with_weights(std::vector<Weight> weights) const;

  /// True iff the solution is a stable set and its weight field equals the
  /// actual weight sum.  Solvers recheck through this before returning.
  bool verify_solution(const StableSetSolution& sol) const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id i came from original[i] in the host
};

}  // namespace stablebull
