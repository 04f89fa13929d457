#include "wban/multigraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/one_bit_color_map.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>
#include <boost/property_map/property_map.hpp>

namespace wban {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Union-find over non-loop edges; returns root per 0-based vertex.
std::vector<int> component_roots(const MultiGraph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    int ra = find_root(parent, e.u - 1);
    int rb = find_root(parent, e.v - 1);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  for (int v = 0; v < g.vertex_count(); ++v) parent[v] = find_root(parent, v);
  return parent;
}

}  // namespace

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw std::invalid_argument("edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") has an endpoint outside 1.." +
                                  std::to_string(n));
    }
  }
}

MultiGraph MultiGraph::from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back(Edge{u, v, std::nullopt});
  return MultiGraph(n, std::move(edges));
}

MultiGraph MultiGraph::from_pairs(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return from_pairs(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

std::size_t MultiGraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

MultiGraph MultiGraph::delete_edges(std::span<const EdgeId> ids) const {
  std::vector<char> dead(edges_.size(), 0);
  for (EdgeId id : ids) {
    if (id >= edges_.size()) {
      throw std::out_of_range("unknown edge id " + std::to_string(id) + " (graph has " +
                              std::to_string(edges_.size()) + " edges)");
    }
    dead[id] = 1;
  }
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!dead[i]) kept.push_back(edges_[i]);
  }
  return MultiGraph(n_, std::move(kept));
}

MultiGraph MultiGraph::keep_edges(std::uint64_t alive) const {
  if (edges_.size() > 64) throw std::length_error("bitmask subgraphs need at most 64 edges");
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (alive >> i & 1U) kept.push_back(edges_[i]);
  }
  return MultiGraph(n_, std::move(kept));
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    if (!a.edges_[i].same_endpoints(b.edges_[i])) return false;
    if (a.edges_[i].provenance != b.edges_[i].provenance) return false;
  }
  return true;
}

int GraphStats::count_degree_equal(int target) const {
  return static_cast<int>(std::count(incidence_degree.begin(), incidence_degree.end(), target));
}

int GraphStats::count_degree_at_least_plus_two(int target) const {
  return static_cast<int>(std::count_if(incidence_degree.begin(), incidence_degree.end(),
                                        [target](int d) { return d >= target + 2; }));
}

GraphStats stats(const MultiGraph& g) {
  const int n = g.vertex_count();
  GraphStats s;
  s.incidence_degree.assign(n, 0);
  s.loops_at_vertex.assign(n, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++s.loop_count;
      ++s.loops_at_vertex[e.u - 1];
      ++s.incidence_degree[e.u - 1];
    } else {
      ++s.incidence_degree[e.u - 1];
      ++s.incidence_degree[e.v - 1];
    }
  }
  if (n > 0) {
    s.min_incidence_degree = *std::min_element(s.incidence_degree.begin(), s.incidence_degree.end());
    s.max_loops = *std::max_element(s.loops_at_vertex.begin(), s.loops_at_vertex.end());
  }
  s.incidence_sum = std::accumulate(s.incidence_degree.begin(), s.incidence_degree.end(), std::size_t{0});
  if (s.incidence_sum != 2 * g.edge_count() - s.loop_count) {
    throw std::logic_error("incidence sum does not equal 2m - L_G");
  }
  return s;
}

std::vector<std::vector<Vertex>> components(const MultiGraph& g) {
  const std::vector<int> root = component_roots(g);
  std::vector<int> block_of(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> blocks;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int& b = block_of[root[v]];
    if (b < 0) {
      b = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[b].push_back(v + 1);
  }
  return blocks;
}

std::vector<std::vector<Vertex>> loopless_components(const MultiGraph& g) {
  const std::vector<int> root = component_roots(g);
  std::vector<char> looped(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) looped[root[e.u - 1]] = 1;
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& block : components(g)) {
    if (!looped[root[block.front() - 1]]) out.push_back(std::move(block));
  }
  return out;
}

bool is_decodable(const MultiGraph& g) { return loopless_components(g).empty(); }

namespace {

void require_cut_input(const MultiGraph& g) {
  if (g.vertex_count() < 2) throw std::domain_error("edge connectivity is undefined for n < 2");
  if (components(g).size() != 1) throw std::domain_error("graph is already disconnected");
}

}  // namespace

int edge_connectivity_bruteforce(const MultiGraph& g) {
  require_cut_input(g);
  const int n = g.vertex_count();
  if (n > 24) throw std::length_error("bipartition brute force supports at most 24 vertices");
  int best = std::numeric_limits<int>::max();
  // Vertex n is pinned outside S, so each bipartition is visited once.
  const std::uint32_t limit = 1U << (n - 1);
  for (std::uint32_t side = 1; side < limit; ++side) {
    int crossing = 0;
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      const bool in_u = e.u < n && (side >> (e.u - 1) & 1U);
      const bool in_v = e.v < n && (side >> (e.v - 1) & 1U);
      crossing += in_u != in_v;
    }
    best = std::min(best, crossing);
  }
  return best;
}

int edge_connectivity_stoer_wagner(const MultiGraph& g) {
  require_cut_input(g);
  using WeightProp = boost::property<boost::edge_weight_t, int>;
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::no_property, WeightProp>;
  BGraph bg(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) boost::add_edge(e.u - 1, e.v - 1, WeightProp(1), bg);
  }
  auto parity = boost::make_one_bit_color_map(boost::num_vertices(bg), boost::get(boost::vertex_index, bg));
  return boost::stoer_wagner_min_cut(bg, boost::get(boost::edge_weight, bg), boost::parity_map(parity));
}

int edge_connectivity(const MultiGraph& g) {
  if (g.vertex_count() <= 16) return edge_connectivity_bruteforce(g);
  return edge_connectivity_stoer_wagner(g);
}

DecodabilityKernel::DecodabilityKernel(const MultiGraph& g)
    : n_(g.vertex_count()), m_(static_cast<int>(g.edge_count())) {
  if (m_ > 64) throw std::length_error("bitmask kernels support at most 64 edges");
  a_.reserve(m_);
  b_.reserve(m_);
  for (const Edge& e : g.edges()) {
    a_.push_back(e.u - 1);
    b_.push_back(e.v - 1);
  }
}

DecodabilityKernel::Workspace DecodabilityKernel::make_workspace() const {
  return Workspace{std::vector<int>(n_), std::vector<unsigned char>(n_)};
}

std::uint64_t DecodabilityKernel::full_mask() const {
  return m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
}

bool DecodabilityKernel::decodable(std::uint64_t alive, Workspace& ws) const {
  std::iota(ws.parent.begin(), ws.parent.end(), 0);
  std::fill(ws.has_loop.begin(), ws.has_loop.end(), 0);
  int blocks = n_;
  while (alive != 0) {
    const int i = std::countr_zero(alive);
    alive &= alive - 1;
    const int ra = find_root(ws.parent, a_[i]);
    if (a_[i] == b_[i]) {
      ws.has_loop[ra] = 1;
      continue;
    }
    const int rb = find_root(ws.parent, b_[i]);
    if (ra == rb) continue;
    ws.parent[rb] = ra;
    ws.has_loop[ra] |= ws.has_loop[rb];
    --blocks;
  }
  int looped_roots = 0;
  for (int v = 0; v < n_; ++v) {
    if (ws.parent[v] == v && ws.has_loop[v]) ++looped_roots;
  }
  return looped_roots == blocks;
}

namespace {

// Next k-subset bitmask in colex order (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

std::vector<EdgeId> find_min_loop_cut(const MultiGraph& g) {
  if (!is_decodable(g)) throw std::domain_error("loop cut is undefined for an undecodable graph");
  const DecodabilityKernel kernel(g);
  const GraphStats st = stats(g);
  const int m = kernel.edge_count();
  const int depth = std::min<int>(static_cast<int>(st.loop_count), st.min_incidence_degree);
  const std::uint64_t full = kernel.full_mask();

  for (int size = 1; size <= depth; ++size) {
    // Partition the size-subsets by their lowest edge id; the smallest
    // fatal lowest id wins so the reported set is deterministic.
    std::atomic<int> best_low{m};
    std::vector<std::uint64_t> found(m, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int low = 0; low <= m - size; ++low) {
      if (low > best_low.load()) continue;
      auto ws = kernel.make_workspace();
      const int rest = size - 1;
      const int span = m - low - 1;
      const std::uint64_t low_bit = std::uint64_t{1} << low;
      auto test = [&](std::uint64_t upper) {
        const std::uint64_t deleted = low_bit | (upper << (low + 1));
        if (!kernel.decodable(full & ~deleted, ws)) {
          found[low] = deleted;
          int cur = best_low.load();
          while (low < cur && !best_low.compare_exchange_weak(cur, low)) {
          }
          return true;
        }
        return false;
      };
      if (rest == 0) {
        test(0);
        continue;
      }
      if (rest > span) continue;
      const std::uint64_t last = (span == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << span) - 1) &
                                 ~((rest == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (span - rest)) - 1));
      for (std::uint64_t upper = (std::uint64_t{1} << rest) - 1;; upper = next_combination(upper)) {
        if (test(upper) || upper == last) break;
      }
    }
    const int low = best_low.load();
    if (low < m) {
      std::vector<EdgeId> ids;
      for (std::uint64_t d = found[low]; d != 0; d &= d - 1) ids.push_back(std::countr_zero(d));
      return ids;
    }
  }
  throw std::logic_error("no loop cut within min(L_G, delta_I)");
}

int min_loop_cut(const MultiGraph& g) { return static_cast<int>(find_min_loop_cut(g).size()); }

}  // namespace wban
