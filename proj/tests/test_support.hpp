#pragma once

// Test-only oracles, independent of the union-find kernel and the loop-cut search.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "wban/multigraph.hpp"
#include "wban/scheme.hpp"

namespace wban::oracle {

/// Depth-first decodability over an explicit edge list.
inline bool dfs_decodable(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<char> loop(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      loop[e.u] = 1;
    } else {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  std::vector<char> seen(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    bool looped = false;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      looped = looped || loop[v];
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (!looped) return false;
  }
  return true;
}

inline std::vector<Edge> surviving(const MultiGraph& g, std::uint64_t alive) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (alive >> i & 1U) out.push_back(g.edge(i));
  }
  return out;
}

/// Census by brute force with the DFS oracle.
inline std::vector<std::uint64_t> decodable_counts(const MultiGraph& g) {
  const int m = static_cast<int>(g.edge_count());
  std::vector<std::uint64_t> c(m + 1, 0);
  for (std::uint64_t alive = 0; alive < (std::uint64_t{1} << m); ++alive) {
    if (dfs_decodable(g.vertex_count(), surviving(g, alive))) ++c[m - std::popcount(alive)];
  }
  return c;
}

/// Loop cut via vertex sets: min over nonempty S of |crossing edges| + |loops inside S|.
inline int loop_cut_by_vertex_sets(const MultiGraph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t set = 1; set < (1U << n); ++set) {
    int cost = 0;
    for (const Edge& e : g.edges()) {
      const bool in_u = set >> (e.u - 1) & 1U;
      const bool in_v = set >> (e.v - 1) & 1U;
      if (e.is_loop()) {
        cost += in_u;
      } else {
        cost += in_u != in_v;
      }
    }
    best = std::min(best, cost);
  }
  return best;
}

/// Decoding probability by summing p^alive q^dead over every decodable subset.
inline double probability_by_subsets(const MultiGraph& g, double p) {
  const int m = static_cast<int>(g.edge_count());
  long double total = 0;
  for (std::uint64_t alive = 0; alive < (std::uint64_t{1} << m); ++alive) {
    if (!dfs_decodable(g.vertex_count(), surviving(g, alive))) continue;
    const int kept = std::popcount(alive);
    total += std::pow(static_cast<long double>(p), kept) * std::pow(1.0L - p, m - kept);
  }
  return static_cast<double>(total);
}

/// Random multigraph with some loops, resampled until decodable.
inline MultiGraph random_decodable(std::mt19937_64& rng, int max_n, int max_m) {
  for (;;) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const int m = std::uniform_int_distribution<int>(n, max_m)(rng);
    std::uniform_int_distribution<int> vertex(1, n);
    std::bernoulli_distribution loop(0.25);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < m; ++i) {
      const int u = vertex(rng);
      pairs.emplace_back(u, loop(rng) ? u : vertex(rng));
    }
    MultiGraph g = MultiGraph::from_pairs(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
    if (dfs_decodable(n, g.edges())) return g;
  }
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace wban::oracle
