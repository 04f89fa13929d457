#include "wban/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wban/io.hpp"
#include "wban/report.hpp"

#ifndef WBAN_PRESETS_PATH
#define WBAN_PRESETS_PATH "data/presets.json"
#endif

namespace wban::cli {

namespace {

using io::json;

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text_file(path, text);
  }
}

std::optional<BoundsReport> own_bounds(const MultiGraph& g, const CensusResult& cen) {
  if (!cen.loop_cut) return std::nullopt;
  try {
    return decodable_count_caps(g.vertex_count(), static_cast<int>(g.edge_count()), *cen.loop_cut,
                                stats(g).max_loops);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

CensusResult load_census(const std::string& path) {
  const json doc = io::read_json_file(path);
  if (doc.contains("c")) return io::census_from_json(doc);
  if (doc.contains("census")) return io::census_from_json(doc.at("census"));
  throw std::invalid_argument(path + " is not a census document");
}

struct GenerateArgs {
  int n = 0, k = 0, r = 0;
  std::string mode = "interleaved";
  std::optional<int> loops;
  std::string format = "json";
  std::string out;
  bool as_graph = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const WbanParams params = derive_params(a.n, a.k, a.r);
  CodingScheme scheme;
  if (a.mode == "plain") {
    scheme = generate_plain(params);
  } else {
    if (!a.loops) throw std::invalid_argument("--L is required for interleaved mode");
    scheme = generate_interleaved(params, *a.loops);
  }
  std::string text;
  if (a.format == "table") {
    text = io::scheme_grid(scheme);
  } else if (a.as_graph) {
    text = io::graph_to_json(to_graph(scheme)).dump(2) + "\n";
  } else {
    text = io::scheme_to_json(scheme).dump(2) + "\n";
  }
  emit(out, text, a.out);
  return kOk;
}

struct CensusArgs {
  std::string file;
  std::string format = "csv";
  int cap = 24;
  bool force = false;
  bool serial = false;
  std::string out;
};

int cmd_census(const CensusArgs& a, std::ostream& out) {
  const MultiGraph g = io::as_graph(io::source_from_json(io::read_json_file(a.file)));
  const CensusResult cen = census(g, CensusOptions{a.cap, a.force, !a.serial});
  const auto bounds = own_bounds(g, cen);
  const BoundsReport* b = bounds ? &*bounds : nullptr;
  std::string text;
  if (a.format == "json") {
    json doc = io::census_to_json(cen);
    if (b) doc["bounds"] = io::bounds_to_json(*b);
    text = doc.dump(2) + "\n";
  } else if (a.format == "table") {
    text = io::census_table(cen, b);
  } else {
    text = io::census_csv(cen, b);
  }
  emit(out, text, a.out);
  return kOk;
}

struct ProbArgs {
  std::string file;
  std::vector<double> p;
  bool grid = false;
  std::string baseline;
  std::string format = "table";
};

int cmd_prob(const ProbArgs& a, std::ostream& out) {
  const CensusResult cen = load_census(a.file);
  std::optional<CensusResult> base;
  if (!a.baseline.empty()) base = load_census(a.baseline);
  std::vector<double> ps = a.p;
  if (a.grid) {
    for (int i = 0; i <= 20; ++i) ps.push_back(i / 20.0);
  }
  if (ps.empty()) throw std::invalid_argument("give --p or --grid");
  json rows = json::array();
  std::ostringstream text;
  text << (a.format == "csv" ? "p,probability" : "p            probability");
  if (base) text << (a.format == "csv" ? ",baseline,difference" : "     baseline         difference");
  text << '\n';
  for (double p : ps) {
    const double v = decoding_probability(cen, p);
    json row{{"p", p}, {"probability", io::fixed(v)}};
    const char* sep = a.format == "csv" ? "," : "   ";
    text << io::fixed(p, 4) << sep << io::fixed(v);
    if (base) {
      const double bv = decoding_probability(*base, p);
      row["baseline"] = io::fixed(bv);
      row["difference"] = io::fixed(v - bv);
      text << sep << io::fixed(bv) << sep << io::fixed(v - bv);
    }
    text << '\n';
    rows.push_back(std::move(row));
  }
  out << (a.format == "json" ? rows.dump(2) + "\n" : text.str());
  return kOk;
}

struct BoundsArgs {
  int n = 0, m = 0, mG = 0, deltaL = 0;
  std::string format = "csv";
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const BoundsReport b = decodable_count_caps(a.n, a.m, a.mG, a.deltaL);
  if (a.format == "json") {
    json doc = io::bounds_to_json(b);
    doc["census"] = io::bounds_as_census_json(b);
    out << doc.dump(2) << '\n';
  } else if (a.format == "table") {
    out << "theta = " << b.theta << "\n"
        << "delta_I cap = " << b.caps.min_incidence_degree << ", m(G) cap = " << b.caps.loop_cut << "\n"
        << "c_" << b.loop_cut << " cap = " << b.level_cap.value << (b.level_cap.clamped ? " (clamped)" : "") << "\n";
    for (const auto& [x, f] : b.near_cut_floors) out << "k_" << x << " >= " << f << " (near-cut)\n";
    for (const auto& [x, f] : b.extension_floors) out << "k_" << x << " >= " << f << " (extension)\n";
    out << io::bounds_csv(b);
  } else {
    out << io::bounds_csv(b);
  }
  return kOk;
}

struct SimulateArgs {
  std::string file;
  TrialConfig config;
  std::optional<double> exact;
  bool exact_from_census = false;
  std::string format = "json";
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const MultiGraph g = io::as_graph(io::source_from_json(io::read_json_file(a.file)));
  const MonteCarloResult r = simulate(g, a.config);
  std::optional<double> exact = a.exact;
  if (!exact && a.exact_from_census) exact = decoding_probability(census(g), a.config.p);
  json doc = io::montecarlo_to_json(r);
  std::optional<ZScore> z;
  if (exact) {
    doc["exact"] = io::fixed(*exact);
    if (*exact > 0.0 && *exact < 1.0) {
      z = compare_exact(r, *exact);
      doc["z"] = z->infinite ? json(z->z > 0 ? "inf" : "-inf") : json(z->z);
    }
  }
  if (a.format == "table") {
    out << "decoding probability   simulation\n"
        << (exact ? io::fixed(*exact) : std::string("-")) << "           " << io::fixed(r.estimate, 5) << '\n';
    if (z) out << "z = " << (z->infinite ? std::string(z->z > 0 ? "inf" : "-inf") : io::fixed(z->z, 3)) << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
  return kOk;
}

struct ReportArgs {
  std::optional<int> n, k, r;
  std::string preset;
  std::string presets = WBAN_PRESETS_PATH;
  std::vector<double> p{0.8, 0.9};
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 8;
  bool no_montecarlo = false;
  bool force = false;
  std::string out;
};

int cmd_report(const ReportArgs& a, std::ostream& out) {
  ReportOptions options;
  WbanParams params;
  if (!a.preset.empty()) {
    Preset preset = load_preset(a.presets, a.preset);
    params = preset.params;
    options.reference = preset.reference;
  } else {
    if (!a.n || !a.k || !a.r) throw std::invalid_argument("give --n --k --r or --preset");
    params = derive_params(*a.n, *a.k, *a.r);
  }
  options.probabilities = a.p;
  options.census.force = a.force;
  options.run_montecarlo = !a.no_montecarlo;
  options.montecarlo = TrialConfig{a.p.empty() ? 0.8 : a.p.front(), a.trials, a.seed, a.workers};
  emit(out, build_report(params, options).dump(2) + "\n", a.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"XOR coding schemes for body-area sensor networks: generation, census, bounds, simulation", "wbancode"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"csv", "json", "table"};

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a coding scheme");
  g->add_option("--n", gen.n, "Sensor count")->required();
  g->add_option("--k", gen.k, "Relay count")->required();
  g->add_option("--r", gen.r, "Redundancy")->required();
  g->add_option("--mode", gen.mode)->check(CLI::IsMember({"interleaved", "plain"}));
  g->add_option("--L", gen.loops, "Loop count for interleaved mode");
  g->add_option("--format", gen.format)->check(CLI::IsMember({"json", "table"}));
  g->add_flag("--as-graph", gen.as_graph, "Emit the graph document instead of the scheme");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  CensusArgs cen;
  auto* c = app.add_subcommand("census", "Exact decodable-subgraph counts");
  c->add_option("file", cen.file, "Scheme or graph JSON")->required();
  c->add_option("--format", cen.format)->check(CLI::IsMember(formats));
  c->add_option("--cap", cen.cap, "Edge cap for exhaustive enumeration");
  c->add_flag("--force", cen.force, "Enumerate past the cap");
  c->add_flag("--serial", cen.serial, "Use the single-threaded reference kernel");
  c->add_option("--out", cen.out);

  ProbArgs prob;
  auto* p = app.add_subcommand("prob", "Decoding probability from a census");
  p->add_option("file", prob.file, "Census JSON")->required();
  p->add_option("--p", prob.p, "Survival probability (repeatable)");
  p->add_flag("--grid", prob.grid, "p = 0, 0.05, ..., 1");
  p->add_option("--baseline", prob.baseline, "Second census; prints the difference");
  p->add_option("--format", prob.format)->check(CLI::IsMember(formats));

  BoundsArgs bnd;
  auto* b = app.add_subcommand("bounds", "Caps D_x on decodable counts");
  b->add_option("--n", bnd.n)->required();
  b->add_option("--m", bnd.m)->required();
  b->add_option("--mG", bnd.mG, "Loop cut")->required();
  b->add_option("--deltaL", bnd.deltaL, "Maximum loops at one vertex")->required();
  b->add_option("--format", bnd.format)->check(CLI::IsMember(formats));

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Monte Carlo decoding probability");
  s->add_option("file", sim.file, "Scheme or graph JSON")->required();
  s->add_option("--p", sim.config.p);
  s->add_option("--trials", sim.config.trials);
  s->add_option("--seed", sim.config.seed);
  s->add_option("--workers", sim.config.workers);
  s->add_option("--exact", sim.exact, "Exact probability to compare against");
  s->add_flag("--exact-from-census", sim.exact_from_census, "Compute the exact value by census");
  s->add_option("--format", sim.format)->check(CLI::IsMember({"json", "table"}));

  ReportArgs rep;
  auto* r = app.add_subcommand("report", "Full bundle over all schemes of one shape");
  r->add_option("--n", rep.n);
  r->add_option("--k", rep.k);
  r->add_option("--r", rep.r);
  r->add_option("--preset", rep.preset, "Preset name");
  r->add_option("--presets", rep.presets, "Preset file");
  r->add_option("--p", rep.p, "Probabilities to evaluate (first one is simulated)");
  r->add_option("--trials", rep.trials);
  r->add_option("--seed", rep.seed);
  r->add_option("--workers", rep.workers);
  r->add_flag("--no-montecarlo", rep.no_montecarlo);
  r->add_flag("--force", rep.force, "Enumerate past the census cap");
  r->add_option("--out", rep.out);

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (*g) return cmd_generate(gen, out);
    if (*c) return cmd_census(cen, out);
    if (*p) return cmd_prob(prob, out);
    if (*b) return cmd_bounds(bnd, out);
    if (*s) return cmd_simulate(sim, out);
    if (*r) return cmd_report(rep, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace wban::cli
