#include <doctest.h>

#include "gss/quantum.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"

using namespace gss;
using namespace gss::testing;

TEST_SUITE_BEGIN("quantum");

TEST_CASE("classical-secret verdicts coincide with the classical scheme") {
  const Graph p5 = path_graph(5);
  CHECK(gsqss_classical_verdict(p5, VertexSet::from_mask(0b00011, 5)).authorized());
  CHECK_FALSE(gsqss_classical_verdict(p5, VertexSet::from_mask(0b00010, 5)).authorized());

  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const Graph g = random_graph(n, 12000 + seed);
    for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
      const VertexSet set = VertexSet::from_mask(b, n);
      CHECK(gsqss_classical_verdict(g, set).authorized() ==
            is_c_accessing(g, set).authorized());
    }
  }
}

TEST_CASE("quantum verdicts on fixtures") {
  const Graph p5 = path_graph(5);

  const QuantumVerdict alternating = gsqss_quantum_verdict(p5, VertexSet::from_mask(0b10101, 5));
  CHECK(alternating.quantum_authorized);
  CHECK(alternating.classical_status == AccessStatus::Authorized);
  CHECK_FALSE(alternating.complement_set.authorized());  // {1,3} cannot decode

  VertexSet everyone(5);
  for (int i = 0; i < 5; ++i) everyone.set(i);
  CHECK(gsqss_quantum_verdict(p5, everyone).quantum_authorized);
  CHECK_FALSE(gsqss_quantum_verdict(p5, VertexSet(5)).quantum_authorized);
}

TEST_CASE("the two reduction routes agree everywhere (n <= 8)") {
  auto graphs = structured_graphs(8);
  for (uint64_t seed = 0; seed < 25; ++seed)
    graphs.push_back(random_graph(4 + static_cast<int>(seed % 5), 13000 + seed));
  for (const Graph& g : graphs) {
    const int n = g.order();
    const Graph gc = complement_graph(g);
    for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
      const VertexSet set = VertexSet::from_mask(b, n);
      const bool in_g = is_c_accessing(g, set).authorized();
      const bool in_gc = is_c_accessing(gc, set).authorized();
      const bool comp_in_g = is_c_accessing(g, set.complement()).authorized();
      REQUIRE((in_g && in_gc) == (in_g && !comp_in_g));
      // And the packaged verdict returns the shared answer with sub-verdicts.
      const QuantumVerdict v = gsqss_quantum_verdict(g, set);
      REQUIRE(v.quantum_authorized == (in_g && in_gc));
      REQUIRE(v.in_graph.authorized() == in_g);
      REQUIRE(v.in_complement_graph.authorized() == in_gc);
      REQUIRE(v.complement_set.authorized() == comp_in_g);
    }
  }
}

TEST_CASE("complement exclusivity: B and V\\B never both quantum-authorized") {
  auto graphs = structured_graphs(7);
  for (uint64_t seed = 0; seed < 15; ++seed)
    graphs.push_back(random_graph(5 + static_cast<int>(seed % 3), 14000 + seed));
  for (const Graph& g : graphs) {
    const int n = g.order();
    for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
      const VertexSet set = VertexSet::from_mask(b, n);
      if (!gsqss_quantum_verdict(g, set).quantum_authorized) continue;
      CHECK_FALSE(gsqss_quantum_verdict(g, set.complement()).quantum_authorized);
    }
  }
}

TEST_CASE("quantum access is monotone (n <= 8)") {
  auto graphs = structured_graphs(6);
  for (uint64_t seed = 0; seed < 10; ++seed)
    graphs.push_back(random_graph(7 + static_cast<int>(seed % 2), 15000 + seed));
  for (const Graph& g : graphs) {
    const int n = g.order();
    for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
      if (!gsqss_quantum_verdict(g, VertexSet::from_mask(b, n)).quantum_authorized) continue;
      for (int v = 0; v < n; ++v) {
        const uint64_t super = b | (uint64_t{1} << v);
        CHECK(gsqss_quantum_verdict(g, VertexSet::from_mask(super, n)).quantum_authorized);
      }
    }
  }
}

TEST_CASE("no_cloning_audit is clean on fixtures") {
  for (const Graph& g : {path_graph(5), cycle_graph(5), complete_graph(6), star_graph(7)}) {
    const QuantumAudit audit = no_cloning_audit(g);
    CHECK(audit.route_disagreements == 0);
    CHECK(audit.no_cloning_violations == 0);
    CHECK(audit.records.size() == (uint64_t{1} << g.order()));
  }
  CHECK_THROWS_AS(no_cloning_audit(empty_graph(21)), std::invalid_argument);
}

TEST_CASE("quantum audit JSON reports clean summaries") {
  const std::string json = quantum_audit_json(no_cloning_audit(path_graph(5)));
  CHECK(json.find("\"route_disagreements\": 0") != std::string::npos);
  CHECK(json.find("\"no_cloning_violations\": 0") != std::string::npos);
}

TEST_SUITE_END();
