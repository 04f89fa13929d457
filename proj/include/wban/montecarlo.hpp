#pragma once

#include <cstdint>

#include "wban/multigraph.hpp"

namespace wban {

/**
   Monte Carlo run settings.

   Trials are split into `workers` contiguous blocks; block w draws from a
   std::mt19937_64 seeded with seed_seq{seed_lo, seed_hi, w}. Each trial
   consumes one 64-bit draw per edge in edge-id order and keeps the edge iff
   (draw >> 11) * 2^-53 < p. The result is a pure function of the graph and
   this config; the number of OpenMP threads never changes it, but a
   different `workers` value is a different experiment.
 */
struct TrialConfig {
  double p = 0.8;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 8;
};

struct MonteCarloResult {
  std::uint64_t successes = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  TrialConfig config;
};

/// Throws std::invalid_argument on p outside [0, 1], zero trials or workers < 1.
void validate(const TrialConfig& config);

/// OpenMP over worker blocks.
MonteCarloResult simulate(const MultiGraph& g, const TrialConfig& config);

/// Same streams run one after another on the calling thread.
MonteCarloResult simulate_serial(const MultiGraph& g, const TrialConfig& config);

struct ZScore {
  double z = 0.0;
  bool infinite = false;
};

/// (estimate - exact) / std_error. Requires 0 < exact < 1.
ZScore compare_exact(const MonteCarloResult& result, double exact);

}  // namespace wban
