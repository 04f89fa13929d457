#include "wban/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace wban {

namespace {

std::mt19937_64 worker_stream(std::uint64_t seed, int worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  return std::mt19937_64(seq);
}

std::uint64_t run_block(const DecodabilityKernel& kernel, const TrialConfig& config, int worker) {
  const std::uint64_t begin = config.trials * worker / config.workers;
  const std::uint64_t end = config.trials * (worker + 1) / config.workers;
  auto gen = worker_stream(config.seed, worker);
  auto ws = kernel.make_workspace();
  const int m = kernel.edge_count();
  std::uint64_t wins = 0;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    std::uint64_t alive = 0;
    for (int e = 0; e < m; ++e) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < config.p) alive |= std::uint64_t{1} << e;
    }
    wins += kernel.decodable(alive, ws);
  }
  return wins;
}

MonteCarloResult finish(std::uint64_t successes, const TrialConfig& config) {
  MonteCarloResult r;
  r.successes = successes;
  r.config = config;
  r.estimate = static_cast<double>(successes) / static_cast<double>(config.trials);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(config.trials));
  return r;
}

}  // namespace

void validate(const TrialConfig& config) {
  if (!(config.p >= 0.0 && config.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (config.workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (config.trials > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(config.workers)) {
    throw std::invalid_argument("trials * workers overflows");
  }
}

MonteCarloResult simulate(const MultiGraph& g, const TrialConfig& config) {
  validate(config);
  const DecodabilityKernel kernel(g);
  std::vector<std::uint64_t> wins(config.workers, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int w = 0; w < config.workers; ++w) wins[w] = run_block(kernel, config, w);
  std::uint64_t total = 0;
  for (std::uint64_t v : wins) total += v;
  return finish(total, config);
}

MonteCarloResult simulate_serial(const MultiGraph& g, const TrialConfig& config) {
  validate(config);
  const DecodabilityKernel kernel(g);
  std::uint64_t total = 0;
  for (int w = 0; w < config.workers; ++w) total += run_block(kernel, config, w);
  return finish(total, config);
}

ZScore compare_exact(const MonteCarloResult& result, double exact) {
  if (!(exact > 0.0 && exact < 1.0)) throw std::domain_error("exact probability must lie in (0, 1)");
  if (result.estimate == exact) return {0.0, false};
  if (result.std_error == 0.0) {
    return {result.estimate > exact ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity(),
            true};
  }
  return {(result.estimate - exact) / result.std_error, false};
}

}  // namespace wban
