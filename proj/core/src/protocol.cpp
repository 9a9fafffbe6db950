#include "gss/protocol.hpp"

#include <random>
#include <utility>

#include <json.hpp>

namespace gss {

using json = nlohmann::ordered_json;

ShareTable make_shares(const Graph& g, int secret, const KeyVector& keys) {
  if (secret != 0 && secret != 1) throw std::invalid_argument("make_shares: secret must be 0 or 1");
  if (keys.size() != g.order())
    throw std::invalid_argument("make_shares: key vector length does not match graph order");
  const int n = g.order();
  ShareTable t{keys, BitVec(n)};
  for (int i = 0; i < n; ++i) {
    const bool c = (secret != 0) ^ g.neighbours(i).dot(keys);
    t.cipher.set(i, c);
  }
  return t;
}

KeyVector sample_keys(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_keys: n must be at least 1");
  std::mt19937_64 engine(seed);
  KeyVector keys(n);
  for (int i = 0; i < n; ++i) keys.set(i, engine() & 1u);
  return keys;
}

PartialShares restrict_shares(const ShareTable& table, const VertexSet& players) {
  if (players.size() != table.size())
    throw std::invalid_argument("restrict_shares: player set width does not match table size");
  return PartialShares{players, table.keys & players, table.cipher & players};
}

int reconstruct(const Graph& g, const VertexSet& b, const VertexSet& d,
                const PartialShares& partial) {
  const int n = g.order();
  if (b.size() != n || d.size() != n || partial.players.size() != n)
    throw std::invalid_argument("reconstruct: width mismatch");
  if (!d.is_subset_of(b)) throw std::invalid_argument("reconstruct: witness is not inside the set");
  if (d.count() % 2 == 0) throw std::invalid_argument("reconstruct: witness has even cardinality");
  const VertexSet odd = odd_neighbourhood(g, d);
  if (!odd.is_subset_of(b))
    throw std::invalid_argument("reconstruct: witness odd-neighbourhood escapes the set");
  if (!b.is_subset_of(partial.players))
    throw std::invalid_argument("reconstruct: missing share for a required player");
  return (partial.cipher.dot(d) ^ partial.keys.dot(odd)) ? 1 : 0;
}

std::optional<Recovery> recover_as_set(const Graph& g, const VertexSet& b,
                                       const PartialShares& partial) {
  const AccessVerdict verdict = is_c_accessing(g, b);
  if (!verdict.authorized()) return std::nullopt;
  const int s = reconstruct(g, b, *verdict.witness_d, partial);
  return Recovery{s, *verdict.witness_d};
}

ShareFile build_share_file(const Graph& g, const ShareTable& table,
                           std::optional<uint64_t> seed, std::optional<int> reveal_secret) {
  if (table.size() != g.order())
    throw std::invalid_argument("build_share_file: table size does not match graph order");
  ShareFile f;
  f.n = g.order();
  f.graph_edges = g.edges();
  f.graph_hash = graph_hash(g);
  f.seed = seed;
  f.generator = seed ? key_generator_id : "";
  VertexSet all(g.order());
  for (int i = 0; i < g.order(); ++i) all.set(i);
  f.shares = restrict_shares(table, all);
  f.secret = reveal_secret;
  return f;
}

std::string share_file_to_json(const ShareFile& file) {
  json j;
  j["n"] = file.n;
  j["graph_edges"] = json::array();
  for (auto [u, v] : file.graph_edges) j["graph_edges"].push_back({u, v});
  j["graph_hash"] = file.graph_hash;
  if (file.seed)
    j["seed"] = *file.seed;
  else
    j["seed"] = nullptr;
  if (!file.generator.empty()) j["generator"] = file.generator;
  j["shares"] = json::array();
  for (int i : file.shares.players.indices()) {
    j["shares"].push_back({{"player", i},
                           {"k", file.shares.keys.get(i) ? 1 : 0},
                           {"c", file.shares.cipher.get(i) ? 1 : 0}});
  }
  if (file.secret) j["secret"] = *file.secret;
  return j.dump(2) + "\n";
}

ShareFile share_file_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ShareFileError(std::string("share file is not valid JSON: ") + e.what());
  }
  try {
    ShareFile f;
    f.n = j.at("n").get<int>();
    if (f.n < 1) throw ShareFileError("share file: n must be at least 1");
    for (const auto& e : j.at("graph_edges")) {
      if (!e.is_array() || e.size() != 2) throw ShareFileError("share file: malformed edge");
      f.graph_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    f.graph_hash = j.at("graph_hash").get<std::string>();
    if (j.contains("seed") && !j["seed"].is_null()) f.seed = j["seed"].get<uint64_t>();
    if (j.contains("generator") && !j["generator"].is_null())
      f.generator = j["generator"].get<std::string>();
    f.shares = PartialShares{VertexSet(f.n), BitVec(f.n), BitVec(f.n)};
    for (const auto& s : j.at("shares")) {
      const int player = s.at("player").get<int>();
      const int k = s.at("k").get<int>();
      const int c = s.at("c").get<int>();
      if (player < 0 || player >= f.n) throw ShareFileError("share file: player index out of range");
      if (f.shares.players.get(player)) throw ShareFileError("share file: duplicate player entry");
      if ((k != 0 && k != 1) || (c != 0 && c != 1))
        throw ShareFileError("share file: share bits must be 0 or 1");
      f.shares.players.set(player);
      f.shares.keys.set(player, k != 0);
      f.shares.cipher.set(player, c != 0);
    }
    if (j.contains("secret") && !j["secret"].is_null()) {
      const int s = j["secret"].get<int>();
      if (s != 0 && s != 1) throw ShareFileError("share file: secret must be 0 or 1");
      f.secret = s;
    }
    return f;
  } catch (const json::exception& e) {
    throw ShareFileError(std::string("share file is missing or mistypes a field: ") + e.what());
  }
}

}  // namespace gss
