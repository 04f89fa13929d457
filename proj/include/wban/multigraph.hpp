#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wban {

using Vertex = int;          // 1-based
using EdgeId = std::size_t;  // position in the edge list

/// Which relay output produced an edge: relay index (0-based) and slot (1-based).
struct Provenance {
  int relay = 0;
  int slot = 0;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Edge {
  Vertex u = 1;
  Vertex v = 1;
  std::optional<Provenance> provenance;

  bool is_loop() const { return u == v; }

  /// Unordered endpoint comparison; provenance is ignored.
  bool same_endpoints(const Edge& other) const {
    return (u == other.u && v == other.v) || (u == other.v && v == other.u);
  }
};

/**
   Undirected loop-multigraph on vertices 1..n.

   Parallel edges and repeated loops are kept as distinct edges; an edge's id
   is its index in edges(). Loops count once toward the incidence degree of
   their vertex and never take part in connectivity.

   Values are immutable after construction.
 */
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Throws std::invalid_argument naming the first edge with an endpoint outside 1..n.
  MultiGraph(int n, std::vector<Edge> edges);

  static MultiGraph from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static MultiGraph from_pairs(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::size_t loop_count() const;

  /// Subgraph with the listed edges removed. Throws std::out_of_range on an unknown id.
  MultiGraph delete_edges(std::span<const EdgeId> ids) const;
  MultiGraph delete_edges(std::initializer_list<EdgeId> ids) const {
    return delete_edges(std::span<const EdgeId>(ids.begin(), ids.size()));
  }

  /// Subgraph keeping only edges whose bit is set in `alive` (requires m <= 64).
  MultiGraph keep_edges(std::uint64_t alive) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct GraphStats {
  std::size_t loop_count = 0;               // L_G
  std::vector<int> incidence_degree;        // d_I(v), index v-1
  int min_incidence_degree = 0;             // delta_I(G)
  std::vector<int> loops_at_vertex;         // delta_l(v), index v-1
  int max_loops = 0;                        // Delta_l(G)
  std::size_t incidence_sum = 0;            // S_I(G) = 2m - L_G

  /// Vertices whose incidence degree equals `target`.
  int count_degree_equal(int target) const;
  /// Vertices whose incidence degree is at least target + 2.
  int count_degree_at_least_plus_two(int target) const;
};

GraphStats stats(const MultiGraph& g);

/// Blocks of vertices joined by non-loop paths, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const MultiGraph& g);

/// Every connected component carries at least one loop. Vacuously true for n = 0.
bool is_decodable(const MultiGraph& g);

/// Components with no loop, in the same order as components().
std::vector<std::vector<Vertex>> loopless_components(const MultiGraph& g);

/**
   Minimum number of non-loop edges whose removal disconnects g.

   Throws std::domain_error when n < 2 ("undefined") or g is already
   disconnected. Small graphs are solved by enumerating vertex bipartitions;
   larger ones use Stoer-Wagner with unit weights.
 */
int edge_connectivity(const MultiGraph& g);

/// Vertex-bipartition brute force behind edge_connectivity (n <= 24).
int edge_connectivity_bruteforce(const MultiGraph& g);

/// Stoer-Wagner behind edge_connectivity for larger graphs.
int edge_connectivity_stoer_wagner(const MultiGraph& g);

/**
   Size of a smallest edge set whose deletion leaves g undecodable.

   Searches deletion sets by ascending size, stopping at the first fatal one.
   The answer never exceeds min(L_G, delta_I(G)), which bounds the depth.
   Throws std::domain_error on an undecodable input and std::length_error
   when m > 64.
 */
int min_loop_cut(const MultiGraph& g);

/// One smallest fatal deletion set found by the same search (ascending edge ids).
std::vector<EdgeId> find_min_loop_cut(const MultiGraph& g);

/**
   Bitmask decodability test for repeated subgraph queries on one graph.

   Holds the endpoints in 0-based form; decodable(alive) runs a union-find over
   the surviving edges. Scratch space lives in a caller-owned Workspace so the
   kernel itself can be shared between threads.
 */
class DecodabilityKernel {
 public:
  explicit DecodabilityKernel(const MultiGraph& g);

  struct Workspace {
    std::vector<int> parent;
    std::vector<unsigned char> has_loop;
  };

  Workspace make_workspace() const;
  bool decodable(std::uint64_t alive, Workspace& ws) const;

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  std::uint64_t full_mask() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> a_;
  std::vector<int> b_;
};

}  // namespace wban
