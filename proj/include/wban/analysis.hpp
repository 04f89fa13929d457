#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wban/exact.hpp"
#include "wban/multigraph.hpp"

namespace wban {

/// Raised when an exact enumeration would exceed the configured edge cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
   Exact decodability census of every edge-deletion subgraph.

   c[x] counts the x-edge deletion sets that leave the graph decodable and
   kk[x] = C(m, x) - c[x] those that do not. loop_cut is the smallest x with
   c[x] < C(m, x), absent for an undecodable graph.
 */
struct CensusResult {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> c;
  std::vector<std::uint64_t> kk;
  std::optional<int> loop_cut;

  bool decodable() const { return !c.empty() && c[0] == 1; }
};

struct CensusOptions {
  int edge_cap = 24;      // 2^m subsets are visited
  bool force = false;     // lift the cap (up to 40 edges)
  bool parallel = true;   // OpenMP kernel; false uses the serial reference
};

/// Census through the kernel selected in `options`, cross-checked against min_loop_cut.
CensusResult census(const MultiGraph& g, const CensusOptions& options = {});

/// Reference kernel: one union-find per subset, single thread, no pruning.
CensusResult census_serial(const MultiGraph& g);

/// OpenMP kernel over the subset space; skips subsets with fewer than n edges.
CensusResult census_parallel(const MultiGraph& g);

/// Builds a census from given decodable counts c[0..] (missing tail entries are zero).
CensusResult census_from_counts(int n, int m, std::vector<std::uint64_t> c);

/// sum_x c[x] p^(m-x) (1-p)^x over x <= m - n. Throws std::domain_error for p outside [0, 1].
double decoding_probability(const CensusResult& census, double p);

/// Product of the per-component decoding probabilities.
double probability_by_components(const MultiGraph& g, double p, const CensusOptions& options = {});

// Analytic bounds on decodable-subgraph counts for decodable graphs with n vertices,
// m edges and loop cut mG.

/// Caps implied by counting incidences: delta_I < 2m/n (so <= floor((2m-1)/n)), loop cut <= floor(2m/(n+1)).
struct DegreeCaps {
  int min_incidence_degree;
  int loop_cut;
};
/// Throws std::invalid_argument when m < n (a decodable graph has at least n edges).
DegreeCaps degree_and_cut_caps(int n, int m);

/// theta = mG(n+1) + n - 2m.
BigInt theta(int n, int m, int mG);

struct CappedValue {
  BigInt value;
  bool clamped = false;  // the raw bound fell outside [0, C(m, x)]
};

/// Cap on c[mG]: C(m, mG) - (theta + 1), clamped into [0, C(m, mG)].
CappedValue cut_level_cap(int n, int m, int mG);

/**
   Floor on kk[mG + x] for a graph whose kk[mG] equals theta + 1:
   (theta + 1) C(m - mG, x) + (n - theta) C(m - mG - 1, x - 1).

   Valid for 1 <= x <= mG - deltaL; throws std::out_of_range otherwise.
 */
BigInt near_cut_floor(int n, int m, int mG, int deltaL, int x);

/// Floor on kk[x + z] from kk[x]: ceil(kx C(m - x, z) / C(x + z, z)).
BigInt extension_floor(const BigInt& kx, int m, int x, int z);

struct BoundsReport {
  int n = 0;
  int m = 0;
  int loop_cut = 0;
  int max_loops = 0;
  BigInt theta;
  DegreeCaps caps{};
  CappedValue level_cap;
  std::vector<std::pair<int, BigInt>> near_cut_floors;   // (x, floor on kk[x])
  std::vector<std::pair<int, BigInt>> extension_floors;  // (x, floor on kk[x])
  std::vector<BigInt> D;            // D[x] for x = 0..m-n, caps on c[x]
  std::vector<bool> D_clamped;
};

/**
   Upper bounds D_x on c_x for every decodable graph with the given n, m,
   loop cut mG and maximum loops per vertex deltaL whose kk[mG] equals
   theta + 1.

   D_x = C(m, x) below mG; the cut-level cap at mG; near_cut_floor up to
   x0 = 2 mG - deltaL; extension_floor seeded at x0 beyond it.
   Throws std::invalid_argument on inconsistent parameters.
 */
BoundsReport decodable_count_caps(int n, int m, int mG, int deltaL);

/// Structure forced on a graph whose kk[loop_cut] equals theta + 1.
struct TightCutReport {
  bool hypothesis_met = false;
  int branch = 0;       // 1: alpha = theta, L_G = mG; 2: alpha = theta + 1, L_G = mG + 1; 0: neither
  long theta = 0;
  int alpha = 0;        // vertices with incidence degree mG
  int beta = 0;         // vertices with incidence degree >= mG + 2
  int loop_count = 0;
  bool consistent = true;  // false would contradict the characterization
};

TightCutReport check_tight_cut_structure(const MultiGraph& g, const CensusResult& census,
                                         const GraphStats& st);

}  // namespace wban
