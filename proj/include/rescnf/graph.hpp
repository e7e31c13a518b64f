#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rescnf/error.hpp"

namespace rescnf {

/// Simple undirected graph; edges are stored with u < v in lexicographic
/// order and neighbor lists are ascending.
class CubicGraph {
 public:
  CubicGraph() = default;
  CubicGraph(std::string name, std::size_t nodes, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
      : name_(std::move(name)), adjacency_(nodes) {
    for (auto& [u, v] : edges) {
      if (u == v || u >= nodes || v >= nodes) throw GraphError("invalid edge in graph " + name_);
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw GraphError("duplicate edge in graph " + name_);
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& n : adjacency_) std::sort(n.begin(), n.end());
  }

  const std::string& name() const { return name_; }
  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& neighbors(std::size_t n) const { return adjacency_[n]; }

  bool is_cubic() const {
    return std::all_of(adjacency_.begin(), adjacency_.end(), [](const auto& n) { return n.size() == 3; });
  }

  /// Index into edges() of {u, v}.
  std::optional<std::size_t> edge_index(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool connected() const {
    if (adjacency_.empty()) return true;
    std::vector<bool> seen(adjacency_.size(), false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : adjacency_[u])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == adjacency_.size();
  }

 private:
  std::string name_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Shortest cycle length via a breadth-first search from every node;
/// nullopt for a forest.
inline std::optional<std::size_t> girth(const CubicGraph& g) {
  const std::size_t n = g.node_count();
  std::optional<std::size_t> best;
  std::vector<std::int64_t> dist(n);
  std::vector<std::int64_t> parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<std::uint32_t> q;
    dist[s] = 0;
    q.push(static_cast<std::uint32_t>(s));
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      if (best && 2 * static_cast<std::size_t>(dist[u]) + 1 >= *best) break;
      for (auto w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != static_cast<std::int64_t>(w)) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// Every cycle of exactly `length` nodes, each listed once starting from its
/// smallest node and oriented so the second node is below the last.
inline std::vector<std::vector<std::uint32_t>> cycles_of_length(const CubicGraph& g, std::size_t length) {
  std::vector<std::vector<std::uint32_t>> out;
  if (length < 3) return out;
  std::vector<std::uint32_t> path;
  std::vector<bool> on_path(g.node_count(), false);
  auto dfs = [&](auto&& self, std::uint32_t start, std::uint32_t u) -> void {
    if (path.size() == length) {
      const auto& nb = g.neighbors(u);
      if (std::binary_search(nb.begin(), nb.end(), start) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (auto w : g.neighbors(u)) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::uint32_t s = 0; s < g.node_count(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return out;
}

namespace graphs {

/// Builds a Hamiltonian cubic graph from LCF notation.
inline CubicGraph from_lcf(std::string name, std::size_t nodes, const std::vector<int>& jumps) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  const auto n = static_cast<std::int64_t>(nodes);
  for (std::int64_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % n));
    const std::int64_t j = (((i + jumps[static_cast<std::size_t>(i) % jumps.size()]) % n) + n) % n;
    if (i < j) edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  }
  return CubicGraph(std::move(name), nodes, std::move(edges));
}

inline CubicGraph k4() { return CubicGraph("k4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline CubicGraph petersen() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return CubicGraph("petersen", 10, std::move(e));
}

/// (3,6)-cage, 14 nodes, LCF [5,-5]^7.
inline CubicGraph heawood() { return from_lcf("heawood", 14, {5, -5}); }

/// (3,7)-cage, 24 nodes, LCF [12,7,-7]^8.
inline CubicGraph mcgee() { return from_lcf("mcgee", 24, {12, 7, -7}); }

inline std::optional<CubicGraph> by_name(std::string_view name) {
  if (name == "k4") return k4();
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "mcgee") return mcgee();
  return std::nullopt;
}

/// Uniform integer in [0, bound) from raw engine output. Avoids
/// std::uniform_int_distribution, whose output differs between standard
/// libraries.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

struct RandomCubicSpec {
  std::size_t nodes = 0;
  std::size_t min_girth = 3;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 20000;
};

/// Random connected cubic graph with girth >= min_girth. Stubs are paired
/// one at a time, lowest open stub first, with a partner drawn uniformly from
/// stubs whose node is far enough away to keep every new cycle at least
/// min_girth long; a dead end restarts the attempt.
inline CubicGraph random_cubic(const RandomCubicSpec& spec) {
  const std::size_t n = spec.nodes;
  if (n < 4 || n % 2 != 0) throw GraphError("random cubic graph needs an even node count >= 4");
  // Simple graphs have girth at least 3; smaller requests would admit
  // parallel edges.
  const std::size_t min_girth = std::max<std::size_t>(spec.min_girth, 3);
  std::mt19937_64 rng(spec.seed);
  std::vector<std::vector<std::uint32_t>> adj(n);
  std::vector<std::int64_t> dist(n);

  auto distances_from = [&](std::uint32_t s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<std::uint32_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
  };

  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    for (auto& a : adj) a.clear();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    bool dead_end = false;
    for (std::uint32_t u = 0; u < n && !dead_end; ++u) {
      while (adj[u].size() < 3) {
        distances_from(u);
        // One entry per open stub, so nodes with more free stubs weigh more.
        std::vector<std::uint32_t> candidates;
        for (std::uint32_t w = u + 1; w < n; ++w) {
          if (adj[w].size() >= 3) continue;
          if (dist[w] >= 0 && static_cast<std::size_t>(dist[w]) + 1 < min_girth) continue;
          for (std::size_t s = adj[w].size(); s < 3; ++s) candidates.push_back(w);
        }
        if (candidates.empty()) {
          dead_end = true;
          break;
        }
        const auto w = candidates[draw_below(rng, candidates.size())];
        adj[u].push_back(w);
        adj[w].push_back(u);
        edges.emplace_back(u, w);
      }
    }
    if (dead_end) continue;
    CubicGraph g("random-n" + std::to_string(n) + "-g" + std::to_string(min_girth) + "-s" +
                     std::to_string(spec.seed),
                 n, std::move(edges));
    auto gi = girth(g);
    if (g.is_cubic() && g.connected() && gi && *gi >= min_girth) return g;
  }
  throw GraphError("no cubic graph on " + std::to_string(n) + " nodes with girth >= " +
                   std::to_string(min_girth) + " found within " + std::to_string(spec.max_attempts) +
                   " attempts");
}

}  // namespace graphs

}  // namespace rescnf
