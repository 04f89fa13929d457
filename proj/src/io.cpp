#include "wban/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wban::io {

namespace {

std::uint64_t count_from_json(const json& v) {
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed count \"" + s + "\"");
    return parsed;
  }
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return v.get<std::uint64_t>();
  throw std::invalid_argument("counts must be non-negative integers or decimal strings");
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

}  // namespace

json graph_to_json(const MultiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const json& doc) {
  const int n = require(doc, "n").get<int>();
  if (n < 1) throw std::invalid_argument("graph needs n >= 1");
  std::vector<Edge> edges;
  for (const json& e : require(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be a [u, v] pair");
    edges.push_back(Edge{e[0].get<int>(), e[1].get<int>(), std::nullopt});
  }
  return MultiGraph(n, std::move(edges));
}

json scheme_to_json(const CodingScheme& scheme) {
  json relays = json::array();
  for (std::size_t j = 0; j < scheme.relays.size(); ++j) {
    json slots = json::array();
    for (const Encoding& e : scheme.relays[j]) {
      slots.push_back(e.is_single() ? json::array({e.first()}) : json::array({e.first(), e.second()}));
    }
    relays.push_back(json{{"j", j}, {"slots", std::move(slots)}});
  }
  return json{{"n", scheme.params.n}, {"k", scheme.params.k}, {"r", scheme.params.r}, {"relays", std::move(relays)}};
}

CodingScheme scheme_from_json(const json& doc) {
  CodingScheme scheme;
  scheme.params = derive_params(require(doc, "n").get<int>(), require(doc, "k").get<int>(), require(doc, "r").get<int>());
  const json& relays = require(doc, "relays");
  scheme.relays.resize(relays.size());
  for (const json& relay : relays) {
    const int j = require(relay, "j").get<int>();
    if (j < 0 || j >= static_cast<int>(relays.size())) throw std::invalid_argument("relay index out of range");
    auto& out = scheme.relays[j];
    if (!out.empty()) throw std::invalid_argument("relay " + std::to_string(j) + " listed twice");
    for (const json& slot : require(relay, "slots")) {
      if (slot.size() == 1) {
        out.push_back(Encoding::single(slot[0].get<int>()));
      } else if (slot.size() == 2) {
        out.push_back(Encoding::pair(slot[0].get<int>(), slot[1].get<int>()));
      } else {
        throw std::invalid_argument("slots must be [i] or [i, i2]");
      }
    }
  }
  return scheme;
}

GraphSource source_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("relays")) return scheme_from_json(doc);
  return graph_from_json(doc);
}

MultiGraph as_graph(const GraphSource& src) {
  if (const auto* g = std::get_if<MultiGraph>(&src)) return *g;
  return to_graph(std::get<CodingScheme>(src));
}

json census_to_json(const CensusResult& census) {
  json c = json::array();
  json k = json::array();
  for (int x = 0; x <= census.m; ++x) {
    c.push_back(std::to_string(census.c[x]));
    k.push_back(std::to_string(census.kk[x]));
  }
  json doc{{"n", census.n}, {"m", census.m}, {"c", std::move(c)}, {"k", std::move(k)}};
  doc["loop_cut"] = census.loop_cut ? json(*census.loop_cut) : json(nullptr);
  return doc;
}

CensusResult census_from_json(const json& doc) {
  const int n = require(doc, "n").get<int>();
  const int m = require(doc, "m").get<int>();
  std::vector<std::uint64_t> c;
  for (const json& v : require(doc, "c")) c.push_back(count_from_json(v));
  CensusResult r = census_from_counts(n, m, std::move(c));
  if (doc.contains("k")) {
    const json& k = doc.at("k");
    for (std::size_t x = 0; x < k.size() && x < r.kk.size(); ++x) {
      if (count_from_json(k[x]) != r.kk[x]) throw std::invalid_argument("k_x column disagrees with C(m,x) - c_x");
    }
  }
  return r;
}

json bounds_to_json(const BoundsReport& b) {
  auto floors = [](const std::vector<std::pair<int, BigInt>>& v) {
    json out = json::array();
    for (const auto& [x, f] : v) out.push_back(json{{"x", x}, {"k_floor", to_decimal(f)}});
    return out;
  };
  json D = json::array();
  json clamped = json::array();
  for (std::size_t x = 0; x < b.D.size(); ++x) {
    D.push_back(to_decimal(b.D[x]));
    clamped.push_back(static_cast<bool>(b.D_clamped[x]));
  }
  return json{{"n", b.n},
              {"m", b.m},
              {"mG", b.loop_cut},
              {"deltaL", b.max_loops},
              {"theta", to_decimal(b.theta)},
              {"min_incidence_degree_cap", b.caps.min_incidence_degree},
              {"loop_cut_cap", b.caps.loop_cut},
              {"cut_level_cap", to_decimal(b.level_cap.value)},
              {"cut_level_cap_clamped", b.level_cap.clamped},
              {"near_cut_floors", floors(b.near_cut_floors)},
              {"extension_floors", floors(b.extension_floors)},
              {"D", std::move(D)},
              {"D_clamped", std::move(clamped)}};
}

CensusResult bounds_as_census(const BoundsReport& b) {
  std::vector<std::uint64_t> c;
  c.reserve(b.D.size());
  c.push_back(1);
  for (std::size_t x = 1; x < b.D.size(); ++x) c.push_back(static_cast<std::uint64_t>(b.D[x]));
  return census_from_counts(b.n, b.m, std::move(c));
}

json bounds_as_census_json(const BoundsReport& b) {
  json doc = census_to_json(bounds_as_census(b));
  doc["hypothetical"] = true;
  return doc;
}

json montecarlo_to_json(const MonteCarloResult& r) {
  return json{{"successes", std::to_string(r.successes)},
              {"trials", std::to_string(r.config.trials)},
              {"estimate", r.estimate},
              {"std_error", r.std_error},
              {"seed", std::to_string(r.config.seed)},
              {"workers", r.config.workers},
              {"p", r.config.p}};
}

std::string census_csv(const CensusResult& census, const BoundsReport* bounds) {
  std::ostringstream os;
  os << "x,C(m;x),c_x,k_x,D_x\n";
  for (int x = 0; x <= census.m; ++x) {
    os << x << ',' << binomial(census.m, x) << ',' << census.c[x] << ',' << census.kk[x] << ',';
    if (bounds && x < static_cast<int>(bounds->D.size())) os << bounds->D[x];
    os << '\n';
  }
  return os.str();
}

std::string census_table(const CensusResult& census, const BoundsReport* bounds) {
  std::ostringstream os;
  os << std::setw(4) << "x" << std::setw(22) << "C(m,x)" << std::setw(22) << "c_x" << std::setw(22) << "k_x"
     << std::setw(22) << "D_x" << '\n';
  for (int x = 0; x <= census.m; ++x) {
    os << std::setw(4) << x << std::setw(22) << binomial(census.m, x) << std::setw(22) << census.c[x]
       << std::setw(22) << census.kk[x] << std::setw(22);
    if (bounds && x < static_cast<int>(bounds->D.size())) {
      os << bounds->D[x];
    } else {
      os << "";
    }
    os << '\n';
  }
  os << "m(G) = " << (census.loop_cut ? std::to_string(*census.loop_cut) : std::string("undefined")) << '\n';
  return os.str();
}

std::string bounds_csv(const BoundsReport& b) {
  std::ostringstream os;
  os << "x,C(m;x),D_x,clamped\n";
  for (std::size_t x = 1; x < b.D.size(); ++x) {
    os << x << ',' << binomial(b.m, static_cast<long>(x)) << ',' << b.D[x] << ',' << (b.D_clamped[x] ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string scheme_grid(const CodingScheme& scheme) {
  std::size_t width = 4;
  for (const auto& relay : scheme.relays) {
    for (const Encoding& e : relay) width = std::max(width, to_string(e).size());
  }
  std::ostringstream os;
  for (std::size_t j = 0; j < scheme.relays.size(); ++j) {
    std::ostringstream row;
    row << std::left << std::setw(5) << ("R" + std::to_string(j));
    for (const Encoding& e : scheme.relays[j]) row << " | " << std::setw(static_cast<int>(width)) << to_string(e);
    std::string line = row.str();
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << text;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace wban::io
