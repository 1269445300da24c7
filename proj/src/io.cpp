#include "stablebull/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace stablebull {

namespace {

using ordered_json = nlohmann::ordered_json;
using EdgeList = std::vector<std::pair<int, int>>;

std::string lower_ext(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

}  // namespace

GraphFormat format_from_path(const std::string& path) {
  const std::string ext = lower_ext(path);
  if (ext == "json") return GraphFormat::json;
  if (ext == "col" || ext == "dimacs") return GraphFormat::dimacs;
  if (ext == "g6") return GraphFormat::graph6;
  throw IoError("cannot infer graph format from path: " + path);
}

Graph graph_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw IoError(std::string("json: ") + ex.what());
  }
  if (!doc.is_object()) throw IoError("json: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw IoError("json: field 'n' must be an integer");
  const long long n = doc["n"].get<long long>();
  if (n < 0 || n > 1'000'000) throw IoError("json: vertex count out of range");

  EdgeList edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw IoError("json: 'edges' must be an array");
    for (const auto& item : doc["edges"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer())
        throw IoError("json: each edge must be a pair of integers");
      edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
  }

  std::vector<Weight> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array()) throw IoError("json: 'weights' must be an array");
    for (const auto& item : doc["weights"]) {
      if (!item.is_number_integer())
        throw IoError("json: weights must be integers (floats are rejected)");
      weights.push_back(item.get<Weight>());
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw IoError("json: 'labels' must be an array");
    for (const auto& item : doc["labels"]) {
      if (!item.is_string()) throw IoError("json: labels must be strings");
      labels.push_back(item.get<std::string>());
    }
  }

  return Graph::build(static_cast<int>(n), edges, std::move(weights), std::move(labels));
}

std::string graph_to_json(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.size();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
  doc["edges"] = std::move(edges);
  bool unit = true;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.weight(v) != 1) unit = false;
  if (!unit) doc["weights"] = g.weights();
  if (g.has_labels()) doc["labels"] = g.labels();
  return doc.dump(2) + "\n";
}

Graph graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long long n = -1, m = -1;
  EdgeList edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    const auto fail = [&](const std::string& why) {
      throw IoError("dimacs line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "c") continue;
    if (tok == "p") {
      if (n >= 0) fail("duplicate problem line");
      std::string kind;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0)
        fail("expected 'p edge <n> <m>'");
      std::string junk;
      if (ls >> junk) fail("trailing tokens on problem line");
    } else if (tok == "e") {
      if (n < 0) fail("edge before problem line");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      std::string junk;
      if (ls >> junk) fail("trailing tokens on edge line");
      if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range (vertices are 1-based)");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      fail("unknown line type '" + tok + "'");
    }
  }
  if (n < 0) throw IoError("dimacs: missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw IoError("dimacs: problem line promises " + std::to_string(m) + " edges, found " +
                  std::to_string(edges.size()));
  return Graph::build(static_cast<int>(n), edges);
}

std::string graph_to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

namespace {

int g6_value(char ch) {
  const int v = static_cast<unsigned char>(ch) - 63;
  if (v < 0 || v > 63) throw IoError("graph6: byte out of range");
  return v;
}

}  // namespace

Graph graph_from_graph6(const std::string& text) {
  std::string line;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == '\r') {
      if (!line.empty()) break;
    } else {
      line.push_back(text[i]);
    }
  }
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line = line.substr(header.size());
  if (line.empty()) throw IoError("graph6: empty input");

  long long n = 0;
  std::size_t pos = 0;
  if (line[0] == 126) {
    if (line.size() >= 2 && line[1] == 126)
      throw IoError("graph6: 6-byte length form not supported");
    if (line.size() < 4) throw IoError("graph6: truncated length field");
    n = (static_cast<long long>(g6_value(line[1])) << 12) |
        (static_cast<long long>(g6_value(line[2])) << 6) | g6_value(line[3]);
    pos = 4;
  } else {
    n = g6_value(line[0]);
    pos = 1;
  }

  const long long bits = n * (n - 1) / 2;
  const auto need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need) throw IoError("graph6: payload length mismatch");

  EdgeList edges;
  long long idx = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++idx) {
      const int byte = g6_value(line[pos + static_cast<std::size_t>(idx / 6)]);
      if ((byte >> (5 - idx % 6)) & 1)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  // padding bits beyond the triangle must be zero
  for (long long pad = idx; pad < static_cast<long long>(need) * 6; ++pad) {
    const int byte = g6_value(line[pos + static_cast<std::size_t>(pad / 6)]);
    if ((byte >> (5 - pad % 6)) & 1) throw IoError("graph6: nonzero padding bits");
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string graph_to_graph6(const Graph& g) {
  const int n = g.size();
  if (n > 258047) throw IoError("graph6: graph too large for the 3-byte length form");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  switch (format_from_path(path)) {
    case GraphFormat::json: return graph_from_json(text);
    case GraphFormat::dimacs: return graph_from_dimacs(text);
    case GraphFormat::graph6: return graph_from_graph6(text);
  }
  throw IoError("unreachable");
}

void save_graph(const Graph& g, const std::string& path) {
  switch (format_from_path(path)) {
    case GraphFormat::json: write_file(path, graph_to_json(g)); return;
    case GraphFormat::dimacs: write_file(path, graph_to_dimacs(g)); return;
    case GraphFormat::graph6: write_file(path, graph_to_graph6(g) + "\n"); return;
  }
}

std::vector<Weight> weights_from_json(const std::string& text, int n) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw IoError(std::string("weights json: ") + ex.what());
  }
  if (!doc.is_array()) throw IoError("weights json: expected a plain array");
  if (static_cast<int>(doc.size()) != n)
    throw IoError("weights json: expected exactly " + std::to_string(n) + " entries, got " +
                  std::to_string(doc.size()));
  std::vector<Weight> w;
  w.reserve(doc.size());
  for (const auto& item : doc) {
    if (!item.is_number_integer())
      throw IoError("weights json: entries must be integers (floats are rejected)");
    w.push_back(item.get<Weight>());
  }
  return w;
}

std::vector<Weight> weights_from_csv(const std::string& text, int n) {
  std::vector<Weight> w(static_cast<std::size_t>(n), 1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    const auto fail = [&](const std::string& why) {
      throw IoError("weights csv line " + std::to_string(lineno) + ": " + why);
    };
    long long v = 0, weight = 0;
    char comma = 0;
    if (!(ls >> v)) {
      std::string leftover;
      if (ls.clear(), ls >> leftover) fail("expected '<vertex>,<weight>'");
      continue;  // blank or comment-only line
    }
    if (!(ls >> comma) || comma != ',' || !(ls >> weight)) fail("expected '<vertex>,<weight>'");
    std::string junk;
    if (ls >> junk) fail("trailing tokens");
    if (v < 0 || v >= n) fail("vertex out of range");
    if (seen[static_cast<std::size_t>(v)]) fail("duplicate vertex");
    seen[static_cast<std::size_t>(v)] = true;
    w[static_cast<std::size_t>(v)] = weight;
  }
  return w;
}

std::vector<Weight> load_weights(const std::string& path, int n) {
  const std::string ext = lower_ext(path);
  const std::string text = read_file(path);
  if (ext == "json") return weights_from_json(text, n);
  if (ext == "csv") return weights_from_csv(text, n);
  throw IoError("cannot infer weights format from path: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

namespace {

ordered_json set_json(const VertexSet& s) {
  ordered_json arr = ordered_json::array();
  for (Vertex v = s.first(); v != -1; v = s.next(v)) arr.push_back(v);
  return arr;
}

ordered_json cycle_json(const CycleWitness& c) {
  ordered_json arr = ordered_json::array();
  for (Vertex v : c.c) arr.push_back(v);
  return arr;
}

ordered_json witness_json(const G7Witness& w) {
  ordered_json doc;
  doc["cycle"] = cycle_json(w.cycle);
  doc["d"] = w.d;
  doc["x"] = w.x;
  return doc;
}

}  // namespace

ordered_json solution_to_json(const StableSetSolution& sol, const Graph& g) {
  ordered_json doc;
  doc["weight"] = sol.weight;
  doc["vertices"] = set_json(sol.vertices);
  if (g.has_labels()) {
    ordered_json names = ordered_json::array();
    for (Vertex v = sol.vertices.first(); v != -1; v = sol.vertices.next(v))
      names.push_back(g.label(v));
    doc["labels"] = std::move(names);
  }
  return doc;
}

ordered_json violation_to_json(const Violation& v) {
  ordered_json doc;
  doc["kind"] = violation_kind_name(v.kind);
  doc["vertices"] = v.vertices;
  doc["detail"] = v.detail;
  return doc;
}

ordered_json md_tree_to_json(const MDTree& tree, int node) {
  const MDNode& nd = tree[node];
  ordered_json doc;
  switch (nd.kind) {
    case MDNode::Kind::leaf:
      doc["kind"] = "leaf";
      doc["vertex"] = nd.vertex;
      return doc;
    case MDNode::Kind::parallel: doc["kind"] = "parallel"; break;
    case MDNode::Kind::series: doc["kind"] = "series"; break;
    case MDNode::Kind::prime: doc["kind"] = "prime"; break;
  }
  doc["members"] = set_json(nd.members);
  ordered_json kids = ordered_json::array();
  for (int child : nd.children) kids.push_back(md_tree_to_json(tree, child));
  doc["children"] = std::move(kids);
  return doc;
}

ordered_json trace_to_json(const SolveTrace& trace) {
  ordered_json calls = ordered_json::array();
  for (const auto& call : trace.calls) {
    ordered_json cj;
    cj["n"] = call.n;
    cj["labels"] = call.labels;
    ordered_json rows = ordered_json::array();
    for (const auto& vt : call.vertices) {
      ordered_json vj;
      vj["x"] = vt.x;
      ordered_json comps = ordered_json::array();
      for (const auto& ct : vt.components) {
        ordered_json kj;
        kj["vertices"] = set_json(ct.component);
        kj["c5_branch"] = ct.c5_branch;
        if (ct.witness.has_value()) kj["witness"] = witness_json(*ct.witness);
        kj["clique_f"] = set_json(ct.clique_f);
        kj["leaf_calls"] = ct.leaf_calls;
        kj["weight"] = ct.best.weight;
        comps.push_back(std::move(kj));
      }
      vj["components"] = std::move(comps);
      vj["weight"] = vt.total.weight;
      rows.push_back(std::move(vj));
    }
    cj["vertices"] = std::move(rows);
    cj["best_weight"] = call.best.weight;
    calls.push_back(std::move(cj));
  }
  ordered_json doc;
  doc["calls"] = std::move(calls);
  return doc;
}

ordered_json structure_to_json(const StructureResult& result, const Graph& g) {
  ordered_json doc;
  doc["witness"] = witness_json(result.witness);
  ordered_json part;
  part["cycle"] = cycle_json(result.partition.cycle);
  part["f"] = set_json(result.partition.f);
  part["t"] = set_json(result.partition.t);
  part["w"] = set_json(result.partition.w);
  doc["partition"] = std::move(part);
  if (g.has_labels()) {
    ordered_json names = ordered_json::array();
    for (Vertex v = result.partition.f.first(); v != -1; v = result.partition.f.next(v))
      names.push_back(g.label(v));
    doc["f_labels"] = std::move(names);
  }
  return doc;
}

}  // namespace stablebull
