#include <doctest.h>

#include <cstdlib>

#include "gss/protocol.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"

using namespace gss;
using namespace gss::testing;

namespace {

VertexSet full_set(int n) {
  VertexSet s(n);
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("protocol");

TEST_CASE("P5 reference run: s=1, keys 01101 give cipher bits 00011") {
  const Graph p5 = path_graph(5);
  const KeyVector keys = BitVec::from_mask(0b10110, 5);  // k = (0,1,1,0,1)
  const ShareTable t = make_shares(p5, 1, keys);
  CHECK(t.cipher == BitVec::from_mask(0b11000, 5));  // c = (0,0,0,1,1)
  CHECK(t.keys == keys);
}

TEST_CASE("make_shares edge cases") {
  const Graph p5 = path_graph(5);
  const ShareTable zeros = make_shares(p5, 0, BitVec(5));
  CHECK(zeros.keys.none());
  CHECK(zeros.cipher.none());

  const Graph k1 = complete_graph(1);
  const ShareTable lone = make_shares(k1, 1, BitVec(1));
  CHECK_FALSE(lone.keys.get(0));
  CHECK(lone.cipher.get(0));  // no neighbours: c_0 = s

  CHECK_THROWS_AS(make_shares(p5, 2, BitVec(5)), std::invalid_argument);
  CHECK_THROWS_AS(make_shares(p5, 0, BitVec(4)), std::invalid_argument);
}

TEST_CASE("make_shares agrees with the per-vertex counting oracle") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 1 + static_cast<int>(seed % 9);
    const Graph g = random_graph(n, 7000 + seed);
    for (int s = 0; s <= 1; ++s) {
      const KeyVector keys = sample_keys(n, seed * 2 + static_cast<uint64_t>(s));
      const ShareTable t = make_shares(g, s, keys);
      CHECK(t.cipher.to_mask() == naive_cipher_bits(g, s, keys.to_mask()));
    }
  }
}

TEST_CASE("sample_keys is deterministic per seed and distinct across seeds") {
  CHECK(sample_keys(64, 12345) == sample_keys(64, 12345));
  CHECK(sample_keys(64, 1) != sample_keys(64, 2));
  CHECK(sample_keys(64, 3) != sample_keys(64, 4));
  CHECK_THROWS_AS(sample_keys(0, 1), std::invalid_argument);
}

TEST_CASE("sample_keys bits are unbiased") {
  const int n = 1'000'000;
  const KeyVector keys = sample_keys(n, 987654321);
  const double mean = static_cast<double>(keys.count()) / n;
  CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("reconstruct on the reference run") {
  const Graph p5 = path_graph(5);
  const ShareTable t = make_shares(p5, 1, BitVec::from_mask(0b10110, 5));

  // B = {1,2,3}, witness D = {2}, Odd(D) = {1,3}: c_2 ^ k_1 ^ k_3 = 1.
  const VertexSet b123 = VertexSet::from_mask(0b01110, 5);
  const int via_inner = reconstruct(p5, b123, VertexSet::from_mask(0b00100, 5),
                                    restrict_shares(t, b123));
  CHECK(via_inner == 1);

  // B = D = {0,2,4}: Odd(D) is empty, c_0 ^ c_2 ^ c_4 = 1.
  const VertexSet alternating = VertexSet::from_mask(0b10101, 5);
  CHECK(reconstruct(p5, alternating, alternating, restrict_shares(t, alternating)) == 1);

  const Graph k1 = complete_graph(1);
  const ShareTable lone = make_shares(k1, 1, BitVec(1));
  const VertexSet v0 = full_set(1);
  CHECK(reconstruct(k1, v0, v0, restrict_shares(lone, v0)) == 1);
}

TEST_CASE("reconstruct validates the witness and the coverage") {
  const Graph p5 = path_graph(5);
  const ShareTable t = make_shares(p5, 0, sample_keys(5, 5));
  const VertexSet b = VertexSet::from_mask(0b00011, 5);

  // D not inside B.
  CHECK_THROWS_AS(reconstruct(p5, b, VertexSet::from_mask(0b00100, 5), restrict_shares(t, b)),
                  std::invalid_argument);
  // |D| even.
  CHECK_THROWS_AS(reconstruct(p5, b, VertexSet::from_mask(0b00011, 5), restrict_shares(t, b)),
                  std::invalid_argument);
  // Odd(D) escapes B: D = {1} has Odd = {0,2}.
  CHECK_THROWS_AS(reconstruct(p5, b, VertexSet::from_mask(0b00010, 5), restrict_shares(t, b)),
                  std::invalid_argument);
  // Valid witness but shares missing for part of B.
  const VertexSet too_few = VertexSet::from_mask(0b00001, 5);
  CHECK_THROWS_AS(reconstruct(p5, b, VertexSet::from_mask(0b00001, 5), restrict_shares(t, too_few)),
                  std::invalid_argument);
}

TEST_CASE("recover_as_set round-trips and refuses forbidden sets") {
  const Graph p5 = path_graph(5);
  const ShareTable t = make_shares(p5, 1, BitVec::from_mask(0b10110, 5));

  const VertexSet tail = VertexSet::from_mask(0b11000, 5);  // {3,4}
  const auto recovered = recover_as_set(p5, tail, restrict_shares(t, tail));
  REQUIRE(recovered.has_value());
  CHECK(recovered->secret == 1);

  const VertexSet forbidden = VertexSet::from_mask(0b01010, 5);  // {1,3}
  CHECK_FALSE(recover_as_set(p5, forbidden, restrict_shares(t, forbidden)).has_value());
}

TEST_CASE("round-trip: every authorized set decodes every (s, k) (n <= 6)") {
  auto graphs = structured_graphs(6);
  for (uint64_t seed = 0; seed < 12; ++seed)
    graphs.push_back(random_graph(3 + static_cast<int>(seed % 4), 8000 + seed));
  for (const Graph& g : graphs) {
    const int n = g.order();
    for (uint64_t b_mask = 0; b_mask < (uint64_t{1} << n); ++b_mask) {
      const VertexSet b = VertexSet::from_mask(b_mask, n);
      if (!is_c_accessing(g, b).authorized()) continue;
      for (int s = 0; s <= 1; ++s) {
        for (uint64_t k = 0; k < (uint64_t{1} << n); ++k) {
          const ShareTable t = make_shares(g, s, BitVec::from_mask(k, n));
          const auto r = recover_as_set(g, b, restrict_shares(t, b));
          REQUIRE(r.has_value());
          REQUIRE(r->secret == s);
        }
      }
    }
  }
}

TEST_CASE("distinct valid witnesses reconstruct the same secret") {
  const Graph p5 = path_graph(5);
  const VertexSet b = VertexSet::from_mask(0b01111, 5);  // {0,1,2,3}
  for (int s = 0; s <= 1; ++s) {
    for (uint64_t k = 0; k < 32; ++k) {
      const ShareTable t = make_shares(p5, s, BitVec::from_mask(k, 5));
      const PartialShares partial = restrict_shares(t, b);
      int witnesses_used = 0;
      for (uint64_t d_mask = 0; d_mask < 32; ++d_mask) {
        if ((d_mask & ~b.to_mask()) != 0) continue;
        const VertexSet d = VertexSet::from_mask(d_mask, 5);
        if (d.count() % 2 == 0) continue;
        if (!odd_neighbourhood(p5, d).is_subset_of(b)) continue;
        ++witnesses_used;
        CHECK(reconstruct(p5, b, d, partial) == s);
      }
      REQUIRE(witnesses_used >= 2);
    }
  }
}

TEST_CASE("share locality: only neighbouring keys matter") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 8;
    const Graph g = random_graph(n, 9000 + seed);
    const KeyVector keys = sample_keys(n, seed);
    const ShareTable base = make_shares(g, 1, keys);
    for (int j = 0; j < n; ++j) {
      KeyVector flipped = keys;
      flipped.flip(j);
      const ShareTable t = make_shares(g, 1, flipped);
      for (int i = 0; i < n; ++i) {
        const bool key_changed = t.keys.get(i) != base.keys.get(i);
        const bool cipher_changed = t.cipher.get(i) != base.cipher.get(i);
        CHECK(key_changed == (i == j));
        CHECK(cipher_changed == g.has_edge(i, j));
      }
    }
  }
}

TEST_CASE("share files round-trip through JSON") {
  const Graph p5 = path_graph(5);
  const KeyVector keys = sample_keys(5, 42);
  const ShareTable t = make_shares(p5, 1, keys);

  const ShareFile f = build_share_file(p5, t, 42);
  CHECK(f.graph_hash == graph_hash(p5));
  CHECK(f.generator == key_generator_id);
  CHECK_FALSE(f.secret.has_value());

  const ShareFile parsed = share_file_from_json(share_file_to_json(f));
  CHECK(parsed == f);

  // Explicit keys: no seed, no generator; revealed secret survives the trip.
  const ShareFile g = build_share_file(p5, t, std::nullopt, 1);
  CHECK(g.generator.empty());
  REQUIRE(g.secret.has_value());
  const ShareFile reparsed = share_file_from_json(share_file_to_json(g));
  CHECK(reparsed == g);
  CHECK(reparsed.secret == 1);
}

TEST_CASE("share_file_from_json rejects malformed input") {
  CHECK_THROWS_AS(share_file_from_json("not json"), ShareFileError);
  CHECK_THROWS_AS(share_file_from_json("{}"), ShareFileError);
  CHECK_THROWS_AS(share_file_from_json(
                      R"({"n":2,"graph_edges":[],"graph_hash":"x","seed":null,
                          "shares":[{"player":5,"k":0,"c":0}]})"),
                  ShareFileError);
  CHECK_THROWS_AS(share_file_from_json(
                      R"({"n":2,"graph_edges":[],"graph_hash":"x","seed":null,
                          "shares":[{"player":0,"k":2,"c":0}]})"),
                  ShareFileError);
  CHECK_THROWS_AS(share_file_from_json(
                      R"({"n":2,"graph_edges":[],"graph_hash":"x","seed":null,
                          "shares":[{"player":0,"k":1,"c":0},{"player":0,"k":1,"c":0}]})"),
                  ShareFileError);
}

TEST_SUITE_END();
