#include "wban/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace wban {

namespace {

CensusResult finish(int n, int m, std::vector<std::uint64_t> c) {
  CensusResult r;
  r.n = n;
  r.m = m;
  c.resize(m + 1, 0);
  r.kk.resize(m + 1);
  for (int x = 0; x <= m; ++x) {
    const std::uint64_t total = binomial_u64(m, x);
    if (c[x] > total) throw std::invalid_argument("c_" + std::to_string(x) + " exceeds C(m, x)");
    r.kk[x] = total - c[x];
  }
  r.c = std::move(c);
  if (r.decodable()) {
    for (int x = 0; x <= m; ++x) {
      if (r.kk[x] != 0) {
        r.loop_cut = x;
        break;
      }
    }
  }
  return r;
}

}  // namespace

CensusResult census_serial(const MultiGraph& g) {
  const DecodabilityKernel kernel(g);
  const int m = kernel.edge_count();
  if (m > 40) throw CapExceeded("census enumeration supports at most 40 edges");
  auto ws = kernel.make_workspace();
  std::vector<std::uint64_t> c(m + 1, 0);
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t alive = 0; alive < end; ++alive) {
    if (kernel.decodable(alive, ws)) ++c[m - std::popcount(alive)];
  }
  return finish(g.vertex_count(), m, std::move(c));
}

CensusResult census_parallel(const MultiGraph& g) {
  const DecodabilityKernel kernel(g);
  const int m = kernel.edge_count();
  const int n = kernel.vertex_count();
  if (m > 40) throw CapExceeded("census enumeration supports at most 40 edges");
  std::vector<std::uint64_t> c(m + 1, 0);
  const long long end = 1LL << m;
#pragma omp parallel
  {
    auto ws = kernel.make_workspace();
    std::vector<std::uint64_t> local(m + 1, 0);
#pragma omp for schedule(static)
    for (long long alive = 0; alive < end; ++alive) {
      const int kept = std::popcount(static_cast<std::uint64_t>(alive));
      // a decodable graph keeps at least n edges
      if (kept < n) continue;
      if (kernel.decodable(static_cast<std::uint64_t>(alive), ws)) ++local[m - kept];
    }
#pragma omp critical
    for (int x = 0; x <= m; ++x) c[x] += local[x];
  }
  return finish(n, m, std::move(c));
}

CensusResult census(const MultiGraph& g, const CensusOptions& options) {
  const auto m = static_cast<int>(g.edge_count());
  if (m > options.edge_cap && !options.force) {
    throw CapExceeded("census of " + std::to_string(m) + " edges visits 2^" + std::to_string(m) +
                      " subsets, over the cap of " + std::to_string(options.edge_cap) +
                      " edges; pass force to run it anyway");
  }
  CensusResult r = options.parallel ? census_parallel(g) : census_serial(g);
  if (r.loop_cut && m <= 64) {
    const int searched = min_loop_cut(g);
    if (searched != *r.loop_cut) {
      throw std::logic_error("census loop cut " + std::to_string(*r.loop_cut) +
                             " disagrees with search result " + std::to_string(searched));
    }
  }
  return r;
}

CensusResult census_from_counts(int n, int m, std::vector<std::uint64_t> c) {
  if (n < 0 || m < 0) throw std::invalid_argument("census dimensions must be non-negative");
  if (static_cast<int>(c.size()) > m + 1) throw std::invalid_argument("more counts than edge-deletion sizes");
  return finish(n, m, std::move(c));
}

double decoding_probability(const CensusResult& census, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability p must lie in [0, 1]");
  const long double q = 1.0L - p;
  const int last = std::min(census.m, census.m - census.n);
  long double total = 0.0L;
  for (int x = 0; x <= last; ++x) {
    if (census.c[x] == 0) continue;
    total += static_cast<long double>(census.c[x]) * std::pow(static_cast<long double>(p), census.m - x) *
             std::pow(q, x);
  }
  return static_cast<double>(total);
}

double probability_by_components(const MultiGraph& g, double p, const CensusOptions& options) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability p must lie in [0, 1]");
  const auto blocks = components(g);
  std::vector<int> block_of(g.vertex_count());
  std::vector<int> local_id(g.vertex_count());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      block_of[blocks[b][i] - 1] = static_cast<int>(b);
      local_id[blocks[b][i] - 1] = static_cast<int>(i) + 1;
    }
  }
  std::vector<std::vector<Edge>> block_edges(blocks.size());
  for (const Edge& e : g.edges()) {
    block_edges[block_of[e.u - 1]].push_back(Edge{local_id[e.u - 1], local_id[e.v - 1], e.provenance});
  }
  long double product = 1.0L;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const MultiGraph part(static_cast<int>(blocks[b].size()), std::move(block_edges[b]));
    product *= decoding_probability(census(part, options), p);
  }
  return static_cast<double>(product);
}

}  // namespace wban
