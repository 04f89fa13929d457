#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wban/io.hpp"

namespace wban {

struct ReportOptions {
  std::vector<double> probabilities{0.8, 0.9};
  CensusOptions census;
  bool run_montecarlo = true;
  TrialConfig montecarlo{0.8, 1'000'000, 1, 8};
  /// Published counts/probabilities to compare against; see data/presets.json.
  std::optional<io::json> reference;
  double reference_tolerance = 1e-9;
};

/**
   End-to-end bundle for one network shape: every interleaved scheme
   (L = 1..n, when k, r >= 2) and the plain scheme, each with its census,
   decoding probabilities, count caps, structure check and Monte Carlo run.

   Entries are keyed "L<i>" and "plain". When a reference is supplied, every
   cell that differs is listed under "reference_discrepancies".
 */
io::json build_report(const WbanParams& params, const ReportOptions& options);

/// Preset named `name` from a presets document ({"<name>": {"n", "k", "r", "reference"?}}).
struct Preset {
  WbanParams params;
  std::optional<io::json> reference;
};
Preset load_preset(const std::filesystem::path& file, const std::string& name);

}  // namespace wban
