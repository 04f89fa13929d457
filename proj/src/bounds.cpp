#include "wban/analysis.hpp"

#include <string>

namespace wban {

DegreeCaps degree_and_cut_caps(int n, int m) {
  if (n < 1) throw std::invalid_argument("bounds need at least one vertex");
  if (m < n) {
    throw std::invalid_argument("a decodable graph on " + std::to_string(n) + " vertices has at least " +
                                std::to_string(n) + " edges, got m=" + std::to_string(m));
  }
  // n * delta_I <= 2m - L_G < 2m, so delta_I is the largest integer strictly below 2m/n.
  return DegreeCaps{(2 * m - 1) / n, (2 * m) / (n + 1)};
}

BigInt theta(int n, int m, int mG) { return BigInt(mG) * (n + 1) + n - BigInt(2) * m; }

CappedValue cut_level_cap(int n, int m, int mG) {
  const BigInt total = binomial(m, mG);
  const BigInt raw = total - (theta(n, m, mG) + 1);
  if (raw > total) return {total, true};
  if (raw < 0) return {0, true};
  return {raw, false};
}

BigInt near_cut_floor(int n, int m, int mG, int deltaL, int x) {
  if (x < 1 || x > mG - deltaL) {
    throw std::out_of_range("offset x=" + std::to_string(x) + " outside 1.." + std::to_string(mG - deltaL));
  }
  const BigInt th = theta(n, m, mG);
  return (th + 1) * binomial(m - mG, x) + (n - th) * binomial(m - mG - 1, x - 1);
}

BigInt extension_floor(const BigInt& kx, int m, int x, int z) {
  if (z < 0 || x < 0 || x + z > m) throw std::out_of_range("extension needs z >= 0 and x + z <= m");
  return ceil_div(kx * binomial(m - x, z), binomial(x + z, z));
}

BoundsReport decodable_count_caps(int n, int m, int mG, int deltaL) {
  if (mG < 1) throw std::invalid_argument("loop cut must be at least 1: a decodable graph has a loop");
  if (m <= 2) throw std::invalid_argument("bounds need m > 2");
  const DegreeCaps caps = degree_and_cut_caps(n, m);
  if (mG > caps.loop_cut) {
    throw std::invalid_argument("loop cut " + std::to_string(mG) + " exceeds floor(2m/(n+1)) = " +
                                std::to_string(caps.loop_cut) + " for n=" + std::to_string(n) +
                                ", m=" + std::to_string(m));
  }
  if (deltaL < 1 || deltaL > mG - 1) {
    throw std::invalid_argument("max loops per vertex must lie in 1..mG-1 = 1.." + std::to_string(mG - 1));
  }

  BoundsReport rep;
  rep.n = n;
  rep.m = m;
  rep.loop_cut = mG;
  rep.max_loops = deltaL;
  rep.theta = theta(n, m, mG);
  rep.caps = caps;
  rep.level_cap = cut_level_cap(n, m, mG);

  const int frontier = 2 * mG - deltaL;
  for (int x = 1; x <= mG - deltaL; ++x) rep.near_cut_floors.emplace_back(mG + x, near_cut_floor(n, m, mG, deltaL, x));
  const BigInt frontier_floor = rep.near_cut_floors.back().second;

  const int last = m - n;
  rep.D.assign(last + 1, 0);
  rep.D_clamped.assign(last + 1, false);
  for (int x = 0; x <= last; ++x) {
    const BigInt total = binomial(m, x);
    BigInt cap;
    if (x < mG) {
      cap = total;
    } else if (x == mG) {
      cap = rep.level_cap.value;
      rep.D_clamped[x] = rep.level_cap.clamped;
    } else if (x <= frontier) {
      cap = total - rep.near_cut_floors[x - mG - 1].second;
    } else {
      const BigInt floor = extension_floor(frontier_floor, m, frontier, x - frontier);
      rep.extension_floors.emplace_back(x, floor);
      cap = total - floor;
    }
    if (cap < 0) {
      cap = 0;
      rep.D_clamped[x] = true;
    } else if (cap > total) {
      cap = total;
      rep.D_clamped[x] = true;
    }
    rep.D[x] = cap;
  }
  return rep;
}

TightCutReport check_tight_cut_structure(const MultiGraph& g, const CensusResult& census,
                                         const GraphStats& st) {
  TightCutReport rep;
  if (!census.loop_cut) throw std::domain_error("structure check needs a decodable graph");
  const int mG = *census.loop_cut;
  const int n = g.vertex_count();
  const int m = static_cast<int>(g.edge_count());
  rep.theta = static_cast<long>(mG) * (n + 1) + n - 2L * m;
  rep.alpha = st.count_degree_equal(mG);
  rep.beta = st.count_degree_at_least_plus_two(mG);
  rep.loop_count = static_cast<int>(st.loop_count);
  rep.hypothesis_met = static_cast<long long>(census.kk[mG]) == rep.theta + 1;
  if (!rep.hypothesis_met) return rep;
  if (rep.beta == 0 && rep.alpha == rep.theta && rep.loop_count == mG) {
    rep.branch = 1;
  } else if (rep.beta == 0 && rep.alpha == rep.theta + 1 && rep.loop_count == mG + 1) {
    rep.branch = 2;
  } else {
    rep.consistent = false;
  }
  return rep;
}

}  // namespace wban
