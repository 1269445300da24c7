#include "stablebull/generate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

#include "stablebull/detect.hpp"
#include "stablebull/modular.hpp"

namespace stablebull {

std::uint64_t Rng::below(std::uint64_t n) {
  assert(n > 0);
  // rejection on the partial top block keeps the draw unbiased
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

int Rng::range(int lo, int hi) {
  assert(lo <= hi);
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph path_graph(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  std::sort(e.begin(), e.end());
  return Graph::build(n, e);
}

Graph complete_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e);
}

Graph wheel_graph(int k) {
  if (k < 3) throw std::invalid_argument("wheel needs a rim of at least 3");
  EdgeList e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
    e.emplace_back(i, k);
  }
  std::sort(e.begin(), e.end());
  return Graph::build(k + 1, e);
}

const EdgeList kG7Edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                           {0, 5}, {3, 5}, {5, 6}};

const EdgeList kUmbrellaEdges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5},
                                 {1, 5}, {2, 5}, {3, 5}, {4, 5}, {5, 6}};

}  // namespace

Graph named_graph(const std::string& name) {
  if (name == "bull") {
    // triangle {b, c, e} with horns a-b and d-c
    return Graph::build(5, EdgeList{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}, {},
                        {"a", "b", "c", "d", "e"});
  }
  if (name == "p6") return path_graph(6);
  if (name == "c5") return cycle_graph(5);
  if (name == "g7") {
    return Graph::build(7, kG7Edges, {}, {"c1", "c2", "c3", "c4", "c5", "d", "x"});
  }
  if (name == "umbrella") {
    return Graph::build(7, kUmbrellaEdges, {}, {"c1", "c2", "c3", "c4", "c5", "u", "p"});
  }
  if (name == "petersen") {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
      e.emplace_back(i, i + 5);
      e.emplace_back(std::min(i + 5, (i + 2) % 5 + 5), std::max(i + 5, (i + 2) % 5 + 5));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph::build(10, e);
  }
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    int param = 0;
    try {
      std::size_t used = 0;
      param = std::stoi(name.substr(colon + 1), &used);
      if (colon + 1 + used != name.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad parameter in graph name: " + name);
    }
    if (param < 0) throw std::invalid_argument("bad parameter in graph name: " + name);
    if (head == "path") return path_graph(param);
    if (head == "cycle") return cycle_graph(param);
    if (head == "complete") return complete_graph(param);
    if (head == "empty") return Graph::build(param, {});
    if (head == "wheel") return wheel_graph(param);
  }
  throw std::invalid_argument("unknown graph name: " + name);
}

std::vector<std::string> named_graph_names() {
  return {"bull",       "p6",       "c5",         "g7",      "umbrella", "petersen",
          "path:<n>",   "cycle:<n>", "complete:<n>", "empty:<n>", "wheel:<k>"};
}

Graph random_graph(int n, double density, Rng& rng) {
  if (n < 0) throw std::invalid_argument("random_graph: negative size");
  const double clamped = std::clamp(density, 0.0, 1.0);
  const auto threshold = static_cast<std::uint64_t>(std::llround(clamped * 1'000'000.0));
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(threshold, 1'000'000)) e.emplace_back(i, j);
  return Graph::build(n, e);
}

std::vector<Weight> random_weights(int n, Weight lo, Weight hi, Rng& rng) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("random_weights: bad range");
  std::vector<Weight> w(static_cast<std::size_t>(n));
  for (auto& x : w)
    x = lo + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(hi - lo) + 1));
  return w;
}

namespace {

// disjoint union of blocks; when `join` also adds every cross edge
Graph combine(const std::vector<Graph>& blocks, bool join) {
  int total = 0;
  for (const Graph& b : blocks) total += b.size();
  EdgeList e;
  int offset = 0;
  std::vector<int> offsets;
  for (const Graph& b : blocks) {
    offsets.push_back(offset);
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + offset, v + offset);
    offset += b.size();
  }
  if (join) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        for (int u = 0; u < blocks[i].size(); ++u)
          for (int v = 0; v < blocks[j].size(); ++v)
            e.emplace_back(offsets[i] + u, offsets[j] + v);
  }
  return Graph::build(total, e);
}

// replace vertex i of `base` by the block parts[i]: edges inside blocks are
// kept, blocks of adjacent base vertices become complete to each other
Graph substitute(const Graph& base, const std::vector<Graph>& parts) {
  assert(static_cast<int>(parts.size()) == base.size());
  EdgeList e;
  std::vector<int> offsets;
  int total = 0;
  for (const Graph& p : parts) {
    offsets.push_back(total);
    for (const auto& [u, v] : p.edges()) e.emplace_back(u + total, v + total);
    total += p.size();
  }
  for (const auto& [a, b] : base.edges())
    for (int u = 0; u < parts[static_cast<std::size_t>(a)].size(); ++u)
      for (int v = 0; v < parts[static_cast<std::size_t>(b)].size(); ++v)
        e.emplace_back(offsets[static_cast<std::size_t>(a)] + u,
                       offsets[static_cast<std::size_t>(b)] + v);
  return Graph::build(total, e);
}

// split n into `parts` positive summands, uniformly-ish
std::vector<int> random_split(int n, int parts, Rng& rng) {
  std::vector<int> sizes(static_cast<std::size_t>(parts), 1);
  for (int left = n - parts; left > 0; --left)
    ++sizes[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(parts)))];
  return sizes;
}

// class members that are prime: substituting class members into their
// vertices stays inside the class because both excluded patterns are prime
Graph prime_base(int index) {
  switch (index) {
    case 0: return path_graph(4);
    case 1: return path_graph(5);
    case 2: return cycle_graph(5);
    default: return named_graph("g7");
  }
}

Graph compose_class_member(int n, Rng& rng) {
  // graphs on <= 4 vertices cannot host either excluded pattern
  if (n <= 4) return random_graph(n, rng.range(20, 80) / 100.0, rng);
  const int op = rng.range(0, 3);
  if (op <= 1) {
    const int parts = rng.range(2, std::min(n, 4));
    std::vector<Graph> blocks;
    for (int s : random_split(n, parts, rng)) blocks.push_back(compose_class_member(s, rng));
    return combine(blocks, op == 1);
  }
  const int max_base = n >= 7 ? 3 : 2;
  const Graph base = prime_base(rng.range(0, max_base));
  std::vector<Graph> parts;
  for (int s : random_split(n, base.size(), rng)) parts.push_back(compose_class_member(s, rng));
  return substitute(base, parts);
}

bool in_class(const Graph& g) {
  return !find_bull(g).has_value() && !find_induced_path6(g).has_value();
}

}  // namespace

Graph random_class_member(int n, Rng& rng, const GenOptions& opts) {
  if (n < 0) throw std::invalid_argument("random_class_member: negative size");
  if (n == 0) return Graph::build(0, {});
  for (int attempt = 0; attempt < opts.attempts; ++attempt) {
    const bool reject_sample =
        !opts.allow_composition || (n <= 8 ? rng.chance(1, 2) : rng.chance(1, 8));
    Graph g = reject_sample ? random_graph(n, rng.range(5, 70) / 100.0, rng)
                            : compose_class_member(n, rng);
    if (in_class(g)) return g;
  }
  throw GenerationBudgetError("random_class_member: attempt budget exhausted");
}

Graph prime_class_member_with_g7(int n, Rng& rng) {
  if (n < 7) throw std::invalid_argument("prime_class_member_with_g7: need n >= 7");
  EdgeList e = kG7Edges;
  const int extra = n - 7;
  int next = 7;
  // the unlabeled shape is forced: a vertex attached to exactly {0, 3} and
  // nothing else duplicates the neighborhood of cycle vertex 4 and kills
  // primality, so every even leftover joins as a 2-attachment + pendant
  // pair shaped like d and x, and a lone odd leftover becomes the clique
  // vertex complete to the first four cycle vertices. rng only shuffles
  // which ids the clique vertex and each pendant take.
  const int pairs = extra / 2;
  const int f_slot =
      extra % 2 == 1 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(pairs) + 1)) : -1;
  for (int slot = 0; slot <= pairs; ++slot) {
    if (slot == f_slot) {
      for (int c : {0, 1, 2, 3}) e.emplace_back(c, next);
      ++next;
    }
    if (slot == pairs) break;
    const int t = rng.chance(1, 2) ? next + 1 : next;
    const int w = t == next ? next + 1 : next;
    e.emplace_back(0, t);
    e.emplace_back(3, t);
    e.emplace_back(std::min(t, w), std::max(t, w));
    next += 2;
  }
  Graph g = Graph::build(n, e);
  if (!in_class(g) || !is_prime(g))
    throw std::logic_error("prime_class_member_with_g7: family invariant broken");
  return g;
}

Graph bull_free_with_umbrella(int n, Rng& rng, int attempts_per_vertex) {
  if (n < 7) throw std::invalid_argument("bull_free_with_umbrella: need n >= 7");
  EdgeList e = kUmbrellaEdges;
  for (int v = 7; v < n; ++v) {
    bool placed = false;
    for (int attempt = 0; attempt < attempts_per_vertex && !placed; ++attempt) {
      const int percent = rng.range(5, 35);
      EdgeList candidate = e;
      for (int u = 0; u < v; ++u)
        if (rng.chance(static_cast<std::uint64_t>(percent), 100)) candidate.emplace_back(u, v);
      Graph g = Graph::build(v + 1, candidate);
      if (!find_bull(g).has_value()) {
        e = std::move(candidate);
        placed = true;
      }
    }
    if (!placed)
      throw GenerationBudgetError("bull_free_with_umbrella: attempt budget exhausted");
  }
  return Graph::build(n, e);
}

Graph random_with_planted_c5(int n, double density, Rng& rng) {
  if (n < 5) throw std::invalid_argument("random_with_planted_c5: need n >= 5");
  const double clamped = std::clamp(density, 0.0, 1.0);
  const auto threshold = static_cast<std::uint64_t>(std::llround(clamped * 1'000'000.0));
  EdgeList e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j < 5) continue;  // keep the planted cycle chordless
      if (rng.chance(threshold, 1'000'000)) e.emplace_back(i, j);
    }
  }
  return Graph::build(n, e);
}

}  // namespace stablebull
