#include <utility>
#include <vector>

#include "doctest.h"
#include "stablebull/graph.hpp"
#include "support.hpp"

using namespace stablebull;
using testsupport::make;

namespace {

GraphErrorKind build_error(int n, std::vector<std::pair<int, int>> edges,
                           std::vector<Weight> weights = {},
                           std::vector<std::string> labels = {}) {
  try {
    Graph::build(n, edges, std::move(weights), std::move(labels));
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("expected GraphError");
  return GraphErrorKind::loop_edge;
}

}  // namespace

TEST_CASE("graph build validates its input") {
  CHECK(build_error(3, {{0, 5}}) == GraphErrorKind::endpoint_out_of_range);
  CHECK(build_error(3, {{-1, 2}}) == GraphErrorKind::endpoint_out_of_range);
  CHECK(build_error(3, {{1, 1}}) == GraphErrorKind::loop_edge);
  CHECK(build_error(3, {{0, 1}, {1, 0}}) == GraphErrorKind::duplicate_edge);
  CHECK(build_error(3, {{0, 1}, {0, 1}}) == GraphErrorKind::duplicate_edge);
  CHECK(build_error(3, {{0, 1}}, {1, 2}) == GraphErrorKind::weight_count_mismatch);
  CHECK(build_error(3, {{0, 1}}, {1, -2, 3}) == GraphErrorKind::negative_weight);
  CHECK(build_error(2, {}, {}, {"a"}) == GraphErrorKind::label_count_mismatch);

  const Graph empty = Graph::build(0, {});
  CHECK(empty.size() == 0);
  CHECK(empty.edge_count() == 0);
}

TEST_CASE("adjacency, degrees and edge listing") {
  const Graph g = make(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});  // bull
  CHECK(g.size() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(0) == 1);
  CHECK(g.neighbor_list(2) == std::vector<Vertex>{1, 3, 4});
  CHECK(g.edges() ==
        std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(g.non_neighborhood(0).to_vector() == std::vector<Vertex>{2, 3, 4});
  CHECK(g.non_neighborhood(1).to_vector() == std::vector<Vertex>{3});
}

TEST_CASE("weights and labels") {
  const Graph g = make(3, {{0, 1}}, {2, 0, 7});
  CHECK(g.weight(0) == 2);
  CHECK(g.weight(1) == 0);
  CHECK(g.weight_of(VertexSet(3, {0, 2})) == 9);
  CHECK_FALSE(g.has_labels());
  CHECK(g.label(2) == "2");  // falls back to the id

  const Graph unit = make(3, {{0, 1}});
  CHECK(unit.weight(0) == 1);
  CHECK(unit.weight_of(unit.vertex_set()) == 3);

  const Graph h = Graph::build(2, std::vector<std::pair<int, int>>{{0, 1}}, {},
                               {"left", "right"});
  CHECK(h.has_labels());
  CHECK(h.label(1) == "right");

  const Graph rw = g.with_weights({5, 5, 5});
  CHECK(rw.weight_of(rw.vertex_set()) == 15);
  CHECK(rw.adjacent(0, 1));
  CHECK_THROWS_AS((void)g.with_weights({1, 2}), GraphError);
  CHECK_THROWS_AS((void)g.with_weights({1, 2, -3}), GraphError);
}

TEST_CASE("vertex set algebra") {
  VertexSet s(8, {1, 3, 6});
  CHECK(s.count() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.first() == 1);
  CHECK(s.next(1) == 3);
  CHECK(s.next(6) == -1);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 6});

  const VertexSet t(8, {3, 4});
  CHECK((s & t).to_vector() == std::vector<Vertex>{3});
  CHECK((s | t).to_vector() == std::vector<Vertex>{1, 3, 4, 6});
  CHECK((s - t).to_vector() == std::vector<Vertex>{1, 6});
  CHECK(s.intersects(t));
  CHECK_FALSE(s.intersects(VertexSet(8, {0, 2})));
  CHECK(VertexSet(8, {1, 3}).is_subset_of(s));
  CHECK_FALSE(s.is_subset_of(t));
  CHECK(s.complement_set().to_vector() == std::vector<Vertex>{0, 2, 4, 5, 7});
  CHECK(VertexSet::full(3).count() == 3);
  CHECK(VertexSet(4).empty());
  CHECK(s == VertexSet(8, {6, 3, 1}));
  CHECK(s != t);

  s.remove(3);
  CHECK(s.to_vector() == std::vector<Vertex>{1, 6});
  s.clear();
  CHECK(s.empty());
}

TEST_CASE("induced subgraphs keep the host mapping") {
  const Graph g = make(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});  // bull
  const InducedSubgraph sub = g.induced_subgraph(VertexSet(5, {1, 2, 4}));
  CHECK(sub.graph.size() == 3);
  CHECK(sub.graph.edge_count() == 3);  // the triangle
  CHECK(sub.original == std::vector<Vertex>{1, 2, 4});

  const InducedSubgraph horns = g.induced_subgraph(VertexSet(5, {0, 3, 4}));
  CHECK(horns.graph.edge_count() == 0);

  const Graph w = make(4, {{0, 1}}, {3, 1, 4, 1});
  const InducedSubgraph ws = w.induced_subgraph(VertexSet(4, {0, 2}));
  CHECK(ws.graph.weight(0) == 3);
  CHECK(ws.graph.weight(1) == 4);
}

TEST_CASE("components respect an allowed set") {
  const Graph g = make(7, {{0, 1}, {1, 2}, {4, 5}});
  const std::vector<VertexSet> comps = g.components();
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].to_vector() == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[1].to_vector() == std::vector<Vertex>{3});
  CHECK(comps[2].to_vector() == std::vector<Vertex>{4, 5});
  CHECK(comps[3].to_vector() == std::vector<Vertex>{6});

  const std::vector<VertexSet> within = g.components_within(VertexSet(7, {0, 2, 4, 5}));
  REQUIRE(within.size() == 3);
  CHECK(within[0].to_vector() == std::vector<Vertex>{0});
  CHECK(within[1].to_vector() == std::vector<Vertex>{2});
  CHECK(within[2].to_vector() == std::vector<Vertex>{4, 5});
}

TEST_CASE("complement of the five cycle is again a five cycle") {
  const Graph c5 = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const Graph co = c5.complement();
  CHECK(co.edge_count() == 5);
  CHECK(testsupport::subset_is_hole(co, {0, 1, 2, 3, 4}));
  CHECK(co.adjacent(0, 2));
  CHECK_FALSE(co.adjacent(0, 1));
}

TEST_CASE("clique, stable and triangle tests") {
  const Graph g = make(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});  // bull
  CHECK(g.is_clique(VertexSet(5, {1, 2, 4})));
  CHECK(g.is_clique(VertexSet(5, {3})));
  CHECK(g.is_clique(VertexSet(5)));
  CHECK_FALSE(g.is_clique(VertexSet(5, {0, 2})));
  CHECK(g.is_stable(VertexSet(5, {0, 3, 4})));
  CHECK_FALSE(g.is_stable(VertexSet(5, {1, 2})));
  CHECK_FALSE(g.is_triangle_free());
  CHECK(make(4, {{0, 1}, {1, 2}, {2, 3}}).is_triangle_free());
}

TEST_CASE("solution verification recomputes the weight") {
  const Graph g = make(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}, {2, 1, 1, 2, 5});
  CHECK(g.verify_solution({VertexSet(5, {0, 3, 4}), 9}));
  CHECK_FALSE(g.verify_solution({VertexSet(5, {0, 3, 4}), 8}));   // wrong sum
  CHECK_FALSE(g.verify_solution({VertexSet(5, {1, 2}), 2}));      // not stable
  CHECK(g.verify_solution({VertexSet(5), 0}));
}

TEST_CASE("solution ordering prefers weight then lexicographic vertices") {
  const auto sol = [](std::initializer_list<Vertex> vs, Weight w) {
    return StableSetSolution{VertexSet(6, vs), w};
  };
  CHECK(better_solution(sol({5}, 4), sol({0, 1}, 3)));
  CHECK_FALSE(better_solution(sol({0, 1}, 3), sol({5}, 4)));
  CHECK(better_solution(sol({0, 2}, 3), sol({0, 3}, 3)));
  CHECK(better_solution(sol({0}, 3), sol({0, 2}, 3)));  // proper prefix wins
  CHECK_FALSE(better_solution(sol({0, 2}, 3), sol({0, 2}, 3)));
  CHECK(better_solution(sol({}, 0), sol({3}, 0)));
}
