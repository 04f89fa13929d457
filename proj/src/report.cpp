#include "wban/report.hpp"

#include <cmath>
#include <sstream>

namespace wban {

namespace {

using io::json;

std::string p_key(double p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

json entry_for(const std::string& label, const CodingScheme& scheme, const ReportOptions& options) {
  const MultiGraph g = to_graph(scheme);
  const GraphStats st = stats(g);
  const CensusResult cen = census(g, options.census);

  json e;
  e["label"] = label;
  e["scheme"] = io::scheme_to_json(scheme);
  e["stats"] = json{{"loop_count", st.loop_count},
                    {"min_incidence_degree", st.min_incidence_degree},
                    {"max_loops", st.max_loops},
                    {"incidence_sum", st.incidence_sum}};
  e["census"] = io::census_to_json(cen);

  std::optional<BoundsReport> bounds;
  CensusResult hypothetical;
  if (cen.loop_cut) {
    try {
      bounds = decodable_count_caps(g.vertex_count(), static_cast<int>(g.edge_count()), *cen.loop_cut, st.max_loops);
      hypothetical = io::bounds_as_census(*bounds);
    } catch (const std::invalid_argument& err) {
      e["bounds_skipped"] = err.what();
    }
    const TightCutReport tight = check_tight_cut_structure(g, cen, st);
    e["tight_cut"] = json{{"hypothesis_met", tight.hypothesis_met}, {"branch", tight.branch},
                          {"theta", tight.theta},                   {"alpha", tight.alpha},
                          {"beta", tight.beta},                     {"consistent", tight.consistent}};
  }
  if (bounds) {
    e["bounds"] = io::bounds_to_json(*bounds);
    bool hold = true;
    for (std::size_t x = 0; x < bounds->D.size(); ++x) hold = hold && BigInt(cen.c[x]) <= bounds->D[x];
    e["bounds_hold"] = hold;
  }

  json probs = json::array();
  for (double p : options.probabilities) {
    const double value = decoding_probability(cen, p);
    json row{{"p", p}, {"value", io::fixed(value)}, {"value_raw", value}};
    if (bounds) row["gap_to_caps"] = io::fixed(decoding_probability(hypothetical, p) - value);
    probs.push_back(std::move(row));
  }
  e["probabilities"] = std::move(probs);

  if (options.run_montecarlo) {
    const MonteCarloResult mc = simulate(g, options.montecarlo);
    json m = io::montecarlo_to_json(mc);
    const double exact = decoding_probability(cen, options.montecarlo.p);
    m["exact"] = io::fixed(exact);
    if (exact > 0.0 && exact < 1.0) {
      const ZScore z = compare_exact(mc, exact);
      m["z"] = z.infinite ? json(z.z > 0 ? "inf" : "-inf") : json(z.z);
    }
    e["montecarlo"] = std::move(m);
  }
  return e;
}

void compare_reference(const json& entry, const json& reference, double tol, json& out) {
  const std::string label = entry.at("label");
  if (reference.contains("census") && reference["census"].contains(label)) {
    const json& row = reference["census"][label];
    const json& c = entry["census"]["c"];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::size_t x = i + 1;
      if (x >= c.size()) break;
      const std::uint64_t computed = std::stoull(c[x].get<std::string>());
      const std::uint64_t published = row[i].get<std::uint64_t>();
      if (computed != published) {
        out.push_back(json{{"label", label}, {"quantity", "c_x"}, {"x", x},
                           {"computed", std::to_string(computed)}, {"reference", std::to_string(published)}});
      }
    }
  }
  if (reference.contains("probability")) {
    for (const json& row : entry["probabilities"]) {
      const std::string key = p_key(row["p"].get<double>());
      if (!reference["probability"].contains(key) || !reference["probability"][key].contains(label)) continue;
      const double published = reference["probability"][key][label].get<double>();
      const double computed = row["value_raw"].get<double>();
      if (std::fabs(computed - published) > tol) {
        out.push_back(json{{"label", label}, {"quantity", "probability"}, {"p", row["p"]},
                           {"computed", io::fixed(computed)}, {"reference", io::fixed(published)},
                           {"difference", io::fixed(computed - published, 13)}});
      }
    }
  }
}

}  // namespace

json build_report(const WbanParams& params, const ReportOptions& options) {
  const WbanParams p = derive_params(params.n, params.k, params.r);
  json report;
  report["params"] = json{{"n", p.n}, {"k", p.k}, {"r", p.r}, {"s", p.s}, {"t", p.t}};
  json entries = json::array();
  if (p.k >= 2 && p.r >= 2) {
    for (int loops = 1; loops <= p.n; ++loops) {
      entries.push_back(entry_for("L" + std::to_string(loops), generate_interleaved(p, loops), options));
    }
  } else {
    report["interleaved_skipped"] = "interleaved schemes need k >= 2 and r >= 2";
  }
  entries.push_back(entry_for("plain", generate_plain(p), options));

  if (options.reference) {
    json discrepancies = json::array();
    for (const json& e : entries) compare_reference(e, *options.reference, options.reference_tolerance, discrepancies);
    report["reference_discrepancies"] = std::move(discrepancies);
  }
  report["entries"] = std::move(entries);
  return report;
}

Preset load_preset(const std::filesystem::path& file, const std::string& name) {
  const json doc = io::read_json_file(file);
  if (!doc.contains(name)) throw std::invalid_argument("no preset named \"" + name + "\" in " + file.string());
  const json& entry = doc.at(name);
  Preset preset{derive_params(entry.at("n").get<int>(), entry.at("k").get<int>(), entry.at("r").get<int>()),
                std::nullopt};
  if (entry.contains("reference")) preset.reference = entry.at("reference");
  return preset;
}

}  // namespace wban
