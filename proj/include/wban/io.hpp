#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "wban/analysis.hpp"
#include "wban/montecarlo.hpp"
#include "wban/multigraph.hpp"
#include "wban/scheme.hpp"

namespace wban::io {

using nlohmann::json;

// Graph document: {"n": int, "edges": [[u, v], ...]}, loops as [i, i].
json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const json& doc);

// Scheme document: {"n", "k", "r", "relays": [{"j": int, "slots": [[i] | [i, i2], ...]}]}.
json scheme_to_json(const CodingScheme& scheme);
CodingScheme scheme_from_json(const json& doc);

/// Either document type; schemes are recognised by their "relays" key.
using GraphSource = std::variant<MultiGraph, CodingScheme>;
GraphSource source_from_json(const json& doc);
MultiGraph as_graph(const GraphSource& src);

// Census document: counts as decimal strings so no value is rounded through a double.
json census_to_json(const CensusResult& census);
CensusResult census_from_json(const json& doc);

json bounds_to_json(const BoundsReport& bounds);
/// Census document whose counts are the caps D_x (c_0 = 1, zero past m - n).
json bounds_as_census_json(const BoundsReport& bounds);
CensusResult bounds_as_census(const BoundsReport& bounds);

json montecarlo_to_json(const MonteCarloResult& result);

/// Rows x, C(m,x), c_x, k_x, D_x; D_x left empty where `bounds` is absent or short.
std::string census_csv(const CensusResult& census, const BoundsReport* bounds = nullptr);
std::string census_table(const CensusResult& census, const BoundsReport* bounds = nullptr);
std::string bounds_csv(const BoundsReport& bounds);

/// Relay-by-slot grid, one row per relay.
std::string scheme_grid(const CodingScheme& scheme);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Fixed-point rendering with `digits` decimals.
std::string fixed(double v, int digits = 10);

}  // namespace wban::io
