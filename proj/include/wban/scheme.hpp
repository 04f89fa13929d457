#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wban/multigraph.hpp"

namespace wban {

using PacketId = int;  // 1-based

/// Network shape: n sensors (one packet each), k relays, redundancy r.
struct WbanParams {
  int n = 0;
  int k = 0;
  int r = 0;
  int s = 0;  // n / k
  int t = 0;  // packets per relay, s * r

  friend bool operator==(const WbanParams&, const WbanParams&) = default;
};

/// Throws std::invalid_argument unless n, k, r >= 1, k | n and n / k >= 2.
WbanParams derive_params(int n, int k, int r);

/// Packet ids relay j receives, in reception order (1-based, wrapping modulo n).
std::vector<PacketId> relay_window(const WbanParams& params, int relay);

/// A relay output: either a packet in the clear or the XOR of two distinct packets.
class Encoding {
 public:
  static Encoding single(PacketId i) { return Encoding(i, i); }
  static Encoding pair(PacketId i, PacketId j);

  bool is_single() const { return first_ == second_; }
  PacketId first() const { return first_; }
  PacketId second() const { return second_; }

  friend bool operator==(const Encoding& a, const Encoding& b) {
    return (a.first_ == b.first_ && a.second_ == b.second_) ||
           (a.first_ == b.second_ && a.second_ == b.first_);
  }

 private:
  Encoding(PacketId a, PacketId b) : first_(a), second_(b) {}
  PacketId first_;
  PacketId second_;
};

std::string to_string(const Encoding& e);

/// Address of one relay output: relay index (0-based) and slot (1-based).
struct SlotRef {
  int relay = 0;
  int slot = 1;
  auto operator<=>(const SlotRef&) const = default;
};

struct CodingScheme {
  WbanParams params;
  std::vector<std::vector<Encoding>> relays;  // relays[j][b-1] is relay j's slot b

  std::size_t encoding_count() const;
  const Encoding& at(SlotRef ref) const { return relays.at(ref.relay).at(ref.slot - 1); }
  std::vector<SlotRef> all_slots() const;

  friend bool operator==(const CodingScheme&, const CodingScheme&) = default;
};

/**
   Interleaved XOR scheme with exactly `loops` packets sent in the clear.

   Relay j's slot b starts as P(js+b) ^ P((j+1)s+b) for b < s,
   P(js+b) ^ P(js+b+1) for s <= b < t and P(js+t) ^ P(js+1) for b = t.
   With loops = y*k + z (z < k), slots 1..y of every relay and slot y+1 of
   relays j < z are then reset to P(js+b).

   Requires k, r >= 2 and 1 <= loops <= n.
 */
CodingScheme generate_interleaved(const WbanParams& params, int loops);

/// Every relay forwards its window in the clear.
CodingScheme generate_plain(const WbanParams& params);

/// Problems found by validate(); empty means the scheme is well formed.
std::vector<std::string> validate(const CodingScheme& scheme);

/// One vertex per packet and one edge per encoding, tagged with its (relay, slot).
/// Throws std::invalid_argument listing the violations of an invalid scheme.
MultiGraph to_graph(const CodingScheme& scheme);

/// GF(2) rank of the received encodings equals n.
bool rank_oracle(const CodingScheme& scheme, const std::set<SlotRef>& received);

/// Same test over slot bitmask (bit index = relay * t + slot - 1).
bool rank_oracle(const CodingScheme& scheme, std::uint64_t received_mask);

using Payload = std::vector<std::uint8_t>;

/// Payload a relay emits for one encoding, given all source packets (index i-1).
Payload encode_slot(const Encoding& e, const std::vector<Payload>& packets);

struct DecodeResult {
  bool ok = false;
  std::vector<Payload> packets;                      // index i-1, filled when ok
  std::vector<std::vector<PacketId>> loopless;       // filled when !ok
};

/// Thrown when two derivations of one packet disagree.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
   Recovers all packets from the received relay outputs.

   Each component of the surviving graph is seeded from one of its loops and
   expanded breadth-first by XOR along pair edges; every other surviving
   edge is then checked against the recovered values. Throws IntegrityError on
   a disagreement and std::invalid_argument on mixed payload lengths.
 */
DecodeResult decode(const CodingScheme& scheme, const std::map<SlotRef, Payload>& received);

}  // namespace wban
