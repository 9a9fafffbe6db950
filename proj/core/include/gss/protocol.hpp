#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gss/access.hpp"
#include "gss/graph.hpp"

namespace gss {

using KeyVector = BitVec;

// One run of the sharing procedure: player i holds the couple
// (keys[i], cipher[i]).
struct ShareTable {
  BitVec keys;
  BitVec cipher;

  int size() const { return keys.size(); }
  friend bool operator==(const ShareTable&, const ShareTable&) = default;
};

// cipher[i] = secret XOR parity of the keys of i's neighbours. Deterministic
// in (g, secret, keys).
ShareTable make_shares(const Graph& g, int secret, const KeyVector& keys);

// Identifier of the key-sampling generator, recorded in share-file metadata:
// std::mt19937_64 seeded with the given seed, one key bit per draw (low bit).
inline constexpr const char* key_generator_id = "mt19937_64-lsb";

KeyVector sample_keys(int n, uint64_t seed);

// Shares held by a coalition; keys/cipher bits are meaningful only where
// players has a bit set.
struct PartialShares {
  VertexSet players;
  BitVec keys;
  BitVec cipher;

  friend bool operator==(const PartialShares&, const PartialShares&) = default;
};

PartialShares restrict_shares(const ShareTable& table, const VertexSet& players);

// XOR of cipher bits over d and key bits over Odd(d). d must be a valid
// witness for b (d ⊆ b, |d| odd, Odd(d) ⊆ b) and partial must cover all of
// b; both are checked up front rather than trusted.
int reconstruct(const Graph& g, const VertexSet& b, const VertexSet& d,
                const PartialShares& partial);

struct Recovery {
  int secret = 0;
  VertexSet witness_d;
};

// Full pipeline: find a witness for b, then reconstruct. Empty exactly when
// b is forbidden — a forbidden coalition never gets a guess.
std::optional<Recovery> recover_as_set(const Graph& g, const VertexSet& b,
                                       const PartialShares& partial);

struct ShareFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Share file contents. The JSON form carries the generating graph's edge
// list and hash so shares cannot silently be replayed against a different
// graph; the secret is only present when explicitly revealed for testing.
struct ShareFile {
  int n = 0;
  std::vector<std::pair<int, int>> graph_edges;
  std::string graph_hash;
  std::optional<uint64_t> seed;
  std::string generator;  // key-generator id; empty when keys were given explicitly
  PartialShares shares;
  std::optional<int> secret;

  friend bool operator==(const ShareFile&, const ShareFile&) = default;
};

ShareFile build_share_file(const Graph& g, const ShareTable& table,
                           std::optional<uint64_t> seed,
                           std::optional<int> reveal_secret = std::nullopt);

std::string share_file_to_json(const ShareFile& file);

// Inverse of share_file_to_json; throws ShareFileError on malformed input.
ShareFile share_file_from_json(std::string_view text);

}  // namespace gss
