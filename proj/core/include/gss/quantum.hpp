#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gss/access.hpp"

namespace gss {

// Verdict for a coalition in the graph-state scheme, derived combinatorially
// from classical access decisions — no quantum state is ever simulated.
// With a classical secret the access structure is exactly the classical one
// for G. With a quantum secret, authorization is computed by two routes that
// must agree: (a) accessing in both G and its complement graph, and
// (b) accessing in G while the complementary coalition is not. Quantum
// verdicts are deliberately two-valued; nothing is claimed about
// non-authorized sets beyond "not authorized".
struct QuantumVerdict {
  VertexSet set;
  AccessStatus classical_status = AccessStatus::Forbidden;
  bool quantum_authorized = false;
  AccessVerdict in_graph;             // (G, B)
  AccessVerdict in_complement_graph;  // (complement of G, B)
  AccessVerdict complement_set;       // (G, V\B)
};

// Classical-secret verdict: identical to the classical scheme's.
AccessVerdict gsqss_classical_verdict(const Graph& g, const VertexSet& b);

// Quantum-secret verdict via both routes. Throws std::logic_error if the
// routes disagree, which signals a broken access module.
QuantumVerdict gsqss_quantum_verdict(const Graph& g, const VertexSet& b);

struct QuantumAuditRecord {
  uint64_t set_mask = 0;
  bool authorized_both_graphs = false;              // route (a)
  bool authorized_with_forbidden_complement = false;  // route (b)
};

struct QuantumAudit {
  int order = 0;
  uint64_t route_disagreements = 0;
  uint64_t no_cloning_violations = 0;  // B and V\B both quantum-authorized
  std::vector<QuantumAuditRecord> records;  // indexed by subset mask
};

// Checks, for every subset, that the two reduction routes agree and that no
// complementary pair of coalitions is simultaneously authorized. Requires
// n <= 20.
QuantumAudit no_cloning_audit(const Graph& g);

std::string quantum_audit_json(const QuantumAudit& audit);

}  // namespace gss
