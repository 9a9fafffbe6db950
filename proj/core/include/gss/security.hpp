#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gss/access.hpp"
#include "gss/graph.hpp"

namespace gss {

// Joint view of a coalition, tallied exactly over all 2^n key vectors for
// each secret value. A view tuple is canonically encoded as a 2|B|-bit
// integer: players in ascending index order, each contributing its key bit
// then its cipher bit. Probabilities are integer counts over 2^n — no
// floating point anywhere in the tally.
struct ViewDistribution {
  VertexSet set;
  int order = 0;                                       // graph order n
  std::array<std::map<uint64_t, uint64_t>, 2> counts;  // per secret: tuple -> count
};

// Exhaustive tally; requires n <= 20.
ViewDistribution view_distribution(const Graph& g, const VertexSet& b);

enum class SecurityVerdict { PerfectlyHidden, Decodable, PartialLeak };
const char* to_string(SecurityVerdict v);

// PerfectlyHidden iff the two per-secret distributions are identical;
// Decodable iff their supports are disjoint; PartialLeak otherwise.
// mutual_information_bits is the exact string "0" or "1" in the first two
// cases and a decimal for PartialLeak. PartialLeak cannot occur for shares
// produced by this protocol — it exists so that a broken implementation
// shows up loudly.
struct SecurityReport {
  VertexSet set;
  SecurityVerdict verdict = SecurityVerdict::PartialLeak;
  std::string mutual_information_bits;
};

// Pure classification of an already-tallied distribution.
SecurityReport classify_distribution(const ViewDistribution& dist);

SecurityReport classify_security(const Graph& g, const VertexSet& b);

struct SubsetAuditRecord {
  uint64_t set_mask = 0;
  SecurityVerdict verdict = SecurityVerdict::PartialLeak;
  std::string mutual_information_bits;
  bool matches_access_module = false;
};

struct PerfectnessAudit {
  int order = 0;
  uint64_t mismatch_count = 0;
  uint64_t partial_leak_count = 0;
  std::vector<SubsetAuditRecord> records;  // indexed by subset mask
};

struct AuditOptions {
  // Corrupts the access-side decision (negative control); the exhaustive
  // tally itself always uses the true graph.
  std::optional<RowFault> access_fault;
  int threads = 0;  // 0 = hardware concurrency
};

// Cross-checks every subset of the vertices: the exhaustive view tally must
// come out Decodable exactly for authorized sets and PerfectlyHidden exactly
// for forbidden ones, with PartialLeak never occurring. Requires n <= 12.
PerfectnessAudit audit_perfectness(const Graph& g, const AuditOptions& options = {});

// Per-subset JSON report: {"set": [...], "verdict": ...,
// "mutual_information_bits": ..., "matches_access_module": ...}.
std::string audit_report_json(const PerfectnessAudit& audit);

}  // namespace gss
