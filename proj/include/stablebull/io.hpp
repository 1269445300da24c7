#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "stablebull/graph.hpp"
#include "stablebull/modular.hpp"
#include "stablebull/solver.hpp"
#include "stablebull/structure.hpp"

namespace stablebull {

/// Malformed input document (syntax, missing fields, bad types, ...).
/// Structural problems with an otherwise well-formed document (loops,
/// duplicate edges, negative weights) surface as GraphError instead.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { json, dimacs, graph6 };

/// Dispatch on extension: .json, .col/.dimacs, .g6.
GraphFormat format_from_path(const std::string& path);

/// JSON graph document: {"n": int, "edges": [[u,v],...], "weights": [int,...]?,
/// "labels": [str,...]?}.  Weights must be integers (floats are rejected,
/// negatives rejected downstream); unknown keys are ignored.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

/// DIMACS coloring format: "p edge <n> <m>" then m lines "e <u> <v>" with
/// 1-based endpoints; "c" lines are comments.  Strict: edge count must
/// match, no junk lines.
Graph graph_from_dimacs(const std::string& text);
std::string graph_to_dimacs(const Graph& g);

/// graph6 (unweighted, unlabeled), short and 3-byte length forms, with or
/// without the ">>graph6<<" header.
Graph graph_from_graph6(const std::string& text);
std::string graph_to_graph6(const Graph& g);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

/// Weight sidecars: a JSON array of exactly n integers, or CSV lines
/// "vertex,weight" (0-based, at most once per vertex, missing vertices
/// default to weight 1, '#' starts a comment).
std::vector<Weight> weights_from_json(const std::string& text, int n);
std::vector<Weight> weights_from_csv(const std::string& text, int n);
std::vector<Weight> load_weights(const std::string& path, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Serializers for machine-readable CLI output.  ordered_json keeps key
/// order fixed so equal inputs always produce byte-equal documents.
nlohmann::ordered_json solution_to_json(const StableSetSolution& sol, const Graph& g);
nlohmann::ordered_json violation_to_json(const Violation& v);
nlohmann::ordered_json md_tree_to_json(const MDTree& tree, int node);
nlohmann::ordered_json trace_to_json(const SolveTrace& trace);
nlohmann::ordered_json structure_to_json(const StructureResult& result, const Graph& g);

}  // namespace stablebull
