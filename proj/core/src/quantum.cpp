#include "gss/quantum.hpp"

#include <stdexcept>

#include <json.hpp>

#include "parallel.hpp"

namespace gss {

AccessVerdict gsqss_classical_verdict(const Graph& g, const VertexSet& b) {
  return is_c_accessing(g, b);
}

QuantumVerdict gsqss_quantum_verdict(const Graph& g, const VertexSet& b) {
  QuantumVerdict v;
  v.set = b;
  v.in_graph = is_c_accessing(g, b);
  v.classical_status = v.in_graph.status;
  v.in_complement_graph = is_c_accessing(complement_graph(g), b);
  v.complement_set = is_c_accessing(g, b.complement());

  const bool both_graphs = v.in_graph.authorized() && v.in_complement_graph.authorized();
  const bool forbidden_complement = v.in_graph.authorized() && !v.complement_set.authorized();
  if (both_graphs != forbidden_complement)
    throw std::logic_error(
        "gsqss_quantum_verdict: the two reduction routes disagree; "
        "the access module is broken");
  v.quantum_authorized = both_graphs;
  return v;
}

QuantumAudit no_cloning_audit(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("no_cloning_audit: 2^n subsets needs n <= 20");

  const Graph complement = complement_graph(g);
  const uint64_t total = uint64_t{1} << n;
  QuantumAudit audit;
  audit.order = n;
  audit.records.resize(total);

  detail::parallel_for_chunks(total, 64, [&](uint64_t begin, uint64_t end) {
    for (uint64_t mask = begin; mask < end; ++mask) {
      const VertexSet b = VertexSet::from_mask(mask, n);
      const bool in_g = is_c_accessing(g, b).authorized();
      const bool in_gc = is_c_accessing(complement, b).authorized();
      const bool comp_in_g = is_c_accessing(g, b.complement()).authorized();
      audit.records[mask] = QuantumAuditRecord{mask, in_g && in_gc, in_g && !comp_in_g};
    }
  });

  const uint64_t full = total - 1;
  for (uint64_t mask = 0; mask < total; ++mask) {
    const auto& rec = audit.records[mask];
    if (rec.authorized_both_graphs != rec.authorized_with_forbidden_complement)
      ++audit.route_disagreements;
    // Count each complementary pair once.
    const uint64_t comp = full & ~mask;
    if (mask <= comp && rec.authorized_with_forbidden_complement &&
        audit.records[comp].authorized_with_forbidden_complement)
      ++audit.no_cloning_violations;
  }
  return audit;
}

std::string quantum_audit_json(const QuantumAudit& audit) {
  nlohmann::ordered_json j;
  j["n"] = audit.order;
  j["subsets"] = audit.records.size();
  j["route_disagreements"] = audit.route_disagreements;
  j["no_cloning_violations"] = audit.no_cloning_violations;
  j["route_disagreement_sets"] = nlohmann::ordered_json::array();
  for (const auto& rec : audit.records) {
    if (rec.authorized_both_graphs == rec.authorized_with_forbidden_complement) continue;
    nlohmann::ordered_json r;
    r["set"] = VertexSet::from_mask(rec.set_mask, audit.order).indices();
    r["authorized_both_graphs"] = rec.authorized_both_graphs;
    r["authorized_with_forbidden_complement"] = rec.authorized_with_forbidden_complement;
    j["route_disagreement_sets"].push_back(std::move(r));
  }
  j["cloning_pairs"] = nlohmann::ordered_json::array();
  const uint64_t full = audit.records.empty() ? 0 : audit.records.size() - 1;
  for (const auto& rec : audit.records) {
    const uint64_t comp = full & ~rec.set_mask;
    if (rec.set_mask > comp) continue;
    if (rec.authorized_with_forbidden_complement &&
        audit.records[comp].authorized_with_forbidden_complement) {
      nlohmann::ordered_json r;
      r["set"] = VertexSet::from_mask(rec.set_mask, audit.order).indices();
      r["complement"] = VertexSet::from_mask(comp, audit.order).indices();
      j["cloning_pairs"].push_back(std::move(r));
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace gss
