#include "wban/scheme.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace wban {

namespace {

PacketId wrap(const WbanParams& p, long x) {
  const long n = p.n;
  return static_cast<PacketId>(((x - 1) % n + n) % n + 1);
}

}  // namespace

WbanParams derive_params(int n, int k, int r) {
  if (n < 1 || k < 1 || r < 1) throw std::invalid_argument("n, k and r must all be at least 1");
  if (n % k != 0) {
    throw std::invalid_argument("relay count k=" + std::to_string(k) + " does not divide n=" +
                                std::to_string(n));
  }
  const int s = n / k;
  if (s < 2) throw std::invalid_argument("requires n > k with s = n/k >= 2");
  return WbanParams{n, k, r, s, s * r};
}

std::vector<PacketId> relay_window(const WbanParams& params, int relay) {
  if (relay < 0 || relay >= params.k) {
    throw std::out_of_range("relay index " + std::to_string(relay) + " outside 0.." +
                            std::to_string(params.k - 1));
  }
  std::vector<PacketId> window;
  window.reserve(params.t);
  for (int b = 1; b <= params.t; ++b) window.push_back(wrap(params, long{relay} * params.s + b));
  return window;
}

Encoding Encoding::pair(PacketId i, PacketId j) {
  if (i == j) throw std::invalid_argument("a pair encoding needs two distinct packets");
  return Encoding(i, j);
}

std::string to_string(const Encoding& e) {
  if (e.is_single()) return "P" + std::to_string(e.first());
  return "P" + std::to_string(e.first()) + "^P" + std::to_string(e.second());
}

std::size_t CodingScheme::encoding_count() const {
  std::size_t total = 0;
  for (const auto& relay : relays) total += relay.size();
  return total;
}

std::vector<SlotRef> CodingScheme::all_slots() const {
  std::vector<SlotRef> out;
  for (int j = 0; j < static_cast<int>(relays.size()); ++j) {
    for (int b = 1; b <= static_cast<int>(relays[j].size()); ++b) out.push_back({j, b});
  }
  return out;
}

CodingScheme generate_interleaved(const WbanParams& params, int loops) {
  const WbanParams p = derive_params(params.n, params.k, params.r);
  if (p.k < 2 || p.r < 2) throw std::invalid_argument("interleaved schemes need k >= 2 and r >= 2");
  if (loops < 1 || loops > p.n) {
    throw std::invalid_argument("loop count L=" + std::to_string(loops) + " outside 1.." +
                                std::to_string(p.n));
  }
  const int y = loops / p.k;
  const int z = loops % p.k;

  CodingScheme scheme{p, {}};
  scheme.relays.resize(p.k);
  for (int j = 0; j < p.k; ++j) {
    const long base = long{j} * p.s;
    auto& out = scheme.relays[j];
    out.reserve(p.t);
    for (int b = 1; b <= p.t; ++b) {
      if (b <= p.s - 1) {
        out.push_back(Encoding::pair(wrap(p, base + b), wrap(p, base + p.s + b)));
      } else if (b <= p.t - 1) {
        out.push_back(Encoding::pair(wrap(p, base + b), wrap(p, base + b + 1)));
      } else {
        out.push_back(Encoding::pair(wrap(p, base + p.t), wrap(p, base + 1)));
      }
    }
    for (int b = 1; b <= y; ++b) out[b - 1] = Encoding::single(wrap(p, base + b));
    if (j + 1 <= z) out[y] = Encoding::single(wrap(p, base + y + 1));
  }
  return scheme;
}

CodingScheme generate_plain(const WbanParams& params) {
  const WbanParams p = derive_params(params.n, params.k, params.r);
  CodingScheme scheme{p, {}};
  for (int j = 0; j < p.k; ++j) {
    std::vector<Encoding> out;
    for (PacketId i : relay_window(p, j)) out.push_back(Encoding::single(i));
    scheme.relays.push_back(std::move(out));
  }
  return scheme;
}

std::vector<std::string> validate(const CodingScheme& scheme) {
  std::vector<std::string> problems;
  const WbanParams& p = scheme.params;
  try {
    if (derive_params(p.n, p.k, p.r) != p) problems.push_back("derived fields s/t are inconsistent");
  } catch (const std::exception& e) {
    problems.push_back(e.what());
    return problems;
  }
  if (static_cast<int>(scheme.relays.size()) != p.k) {
    problems.push_back("expected " + std::to_string(p.k) + " relays, found " +
                       std::to_string(scheme.relays.size()));
  }
  const int relays = std::min<int>(p.k, static_cast<int>(scheme.relays.size()));
  for (int j = 0; j < relays; ++j) {
    const auto& out = scheme.relays[j];
    if (static_cast<int>(out.size()) != p.t) {
      problems.push_back("relay " + std::to_string(j) + " has " + std::to_string(out.size()) +
                         " slots, expected " + std::to_string(p.t));
    }
    const std::vector<PacketId> window = relay_window(p, j);
    for (std::size_t b = 0; b < out.size(); ++b) {
      for (PacketId id : {out[b].first(), out[b].second()}) {
        if (std::find(window.begin(), window.end(), id) == window.end()) {
          problems.push_back("relay " + std::to_string(j) + " slot " + std::to_string(b + 1) + " (" +
                             to_string(out[b]) + ") uses P" + std::to_string(id) +
                             " outside the relay window");
        }
      }
    }
  }
  return problems;
}

MultiGraph to_graph(const CodingScheme& scheme) {
  const auto problems = validate(scheme);
  if (!problems.empty()) {
    std::string msg = "invalid coding scheme:";
    for (const auto& pr : problems) msg += "\n  " + pr;
    throw std::invalid_argument(msg);
  }
  std::vector<Edge> edges;
  edges.reserve(scheme.encoding_count());
  for (int j = 0; j < static_cast<int>(scheme.relays.size()); ++j) {
    for (int b = 1; b <= static_cast<int>(scheme.relays[j].size()); ++b) {
      const Encoding& e = scheme.relays[j][b - 1];
      edges.push_back(Edge{e.first(), e.second(), Provenance{j, b}});
    }
  }
  return MultiGraph(scheme.params.n, std::move(edges));
}

namespace {

bool full_rank(int n, const std::vector<const Encoding*>& rows) {
  std::vector<boost::dynamic_bitset<>> matrix;
  matrix.reserve(rows.size());
  for (const Encoding* e : rows) {
    boost::dynamic_bitset<> row(n);
    row.flip(e->first() - 1);
    if (!e->is_single()) row.flip(e->second() - 1);
    matrix.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(matrix.size()); ++col) {
    auto pivot = std::find_if(matrix.begin() + rank, matrix.end(),
                              [col](const auto& row) { return row.test(col); });
    if (pivot == matrix.end()) continue;
    std::swap(*pivot, matrix[rank]);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      if (static_cast<int>(i) != rank && matrix[i].test(col)) matrix[i] ^= matrix[rank];
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace

bool rank_oracle(const CodingScheme& scheme, const std::set<SlotRef>& received) {
  std::vector<const Encoding*> rows;
  for (const SlotRef& ref : received) rows.push_back(&scheme.at(ref));
  return full_rank(scheme.params.n, rows);
}

bool rank_oracle(const CodingScheme& scheme, std::uint64_t received_mask) {
  std::vector<const Encoding*> rows;
  int bit = 0;
  for (const auto& relay : scheme.relays) {
    for (const Encoding& e : relay) {
      if (received_mask >> bit & 1U) rows.push_back(&e);
      ++bit;
    }
  }
  return full_rank(scheme.params.n, rows);
}

Payload encode_slot(const Encoding& e, const std::vector<Payload>& packets) {
  Payload out = packets.at(e.first() - 1);
  if (!e.is_single()) {
    const Payload& other = packets.at(e.second() - 1);
    if (other.size() != out.size()) throw std::invalid_argument("mixed payload lengths");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= other[i];
  }
  return out;
}

DecodeResult decode(const CodingScheme& scheme, const std::map<SlotRef, Payload>& received) {
  const int n = scheme.params.n;
  std::size_t width = 0;
  bool width_set = false;
  struct Arrival {
    const Encoding* enc;
    const Payload* data;
  };
  std::vector<Arrival> arrivals;
  for (const auto& [ref, data] : received) {
    if (!width_set) {
      width = data.size();
      width_set = true;
    } else if (data.size() != width) {
      throw std::invalid_argument("mixed payload lengths in received slots");
    }
    arrivals.push_back({&scheme.at(ref), &data});
  }

  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t a = 0; a < arrivals.size(); ++a) {
    const Encoding& e = *arrivals[a].enc;
    incident[e.first() - 1].push_back(a);
    if (!e.is_single()) incident[e.second() - 1].push_back(a);
  }

  std::vector<Payload> value(n);
  std::vector<char> known(n, 0);
  std::deque<int> queue;
  auto expand = [&](int root) {
    queue.push_back(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (std::size_t a : incident[v]) {
        const Encoding& e = *arrivals[a].enc;
        if (e.is_single()) continue;
        const int w = (e.first() - 1 == v ? e.second() : e.first()) - 1;
        if (known[w]) continue;
        value[w] = *arrivals[a].data;
        for (std::size_t i = 0; i < width; ++i) value[w][i] ^= value[v][i];
        known[w] = 1;
        queue.push_back(w);
      }
    }
  };

  for (std::size_t a = 0; a < arrivals.size(); ++a) {
    const Encoding& e = *arrivals[a].enc;
    if (!e.is_single() || known[e.first() - 1]) continue;
    value[e.first() - 1] = *arrivals[a].data;
    known[e.first() - 1] = 1;
    expand(e.first() - 1);
  }

  DecodeResult result;
  if (std::find(known.begin(), known.end(), 0) != known.end()) {
    std::vector<Edge> edges;
    for (const Arrival& a : arrivals) edges.push_back(Edge{a.enc->first(), a.enc->second(), std::nullopt});
    result.loopless = loopless_components(MultiGraph(n, std::move(edges)));
    return result;
  }

  for (const Arrival& a : arrivals) {
    if (encode_slot(*a.enc, value) != *a.data) {
      throw IntegrityError("received " + to_string(*a.enc) + " disagrees with the recovered packets");
    }
  }
  result.ok = true;
  result.packets = std::move(value);
  return result;
}

}  // namespace wban
