#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gss/graph.hpp"

namespace gss {

enum class AccessStatus { Authorized, Forbidden };

// Verdict for one player set B. Authorized comes with an odd-cardinality
// witness D ⊆ B whose odd-neighbourhood stays inside B; Forbidden comes with
// a dual witness C ⊆ V\B that oddly dominates every vertex of B. Exactly one
// of the two witnesses is present.
struct AccessVerdict {
  VertexSet set;
  AccessStatus status = AccessStatus::Forbidden;
  std::optional<VertexSet> witness_d;
  std::optional<VertexSet> dual_witness_c;

  bool authorized() const { return status == AccessStatus::Authorized; }
};

// Decides whether the coalition b can reconstruct the secret. Solves the
// GF(2) affine system over variables x_v for v in b: one parity row per
// vertex u outside b requiring |N(u) ∩ D| even, plus one row requiring |D|
// odd. Solvable means Authorized, with the canonical solution (free
// variables zero) as witness; unsolvable means Forbidden, with a dual
// witness attached.
AccessVerdict is_c_accessing(const Graph& g, const VertexSet& b);

// Solves for C ⊆ V\b with |N(u) ∩ C| odd for every u in b. A solution
// exists exactly when b is not c-accessing, so this is the dual side of
// is_c_accessing.
std::optional<VertexSet> find_dual_witness(const Graph& g, const VertexSet& b);

// b is authorized and every (|b|-1)-subset of it is forbidden.
bool is_minimal_authorized(const Graph& g, const VertexSet& b);

// Negative-control hook: recompute the access decision as if bit `v` of the
// parity row derived from vertex `u` were flipped while assembling the
// systems above. The audits use this to demonstrate that a corrupted
// decision procedure is caught; it has no other use.
struct RowFault {
  int u = 0;
  int v = 0;
};
AccessStatus access_status_under_fault(const Graph& g, const VertexSet& b,
                                       const RowFault& fault);

// Classification of every subset of the vertices, one status bit per subset,
// indexed by subset mask. Witness-carrying verdicts are kept only when
// requested at enumeration time; otherwise recompute them on demand with
// is_c_accessing.
class AccessStructure {
 public:
  AccessStructure(int n, std::vector<uint64_t> authorized_bits,
                  std::vector<AccessVerdict> verdicts);

  int order() const { return n_; }
  uint64_t subset_count() const { return uint64_t{1} << n_; }

  bool authorized(uint64_t subset_mask) const;
  AccessStatus status(uint64_t subset_mask) const {
    return authorized(subset_mask) ? AccessStatus::Authorized : AccessStatus::Forbidden;
  }

  uint64_t authorized_count() const { return authorized_count_; }
  uint64_t forbidden_count() const { return subset_count() - authorized_count_; }

  // Authorized sets all of whose one-smaller subsets are forbidden, ordered
  // by (cardinality, mask).
  std::vector<VertexSet> minimal_authorized_sets() const;

  // Non-empty only when enumerated with witnesses.
  const std::vector<AccessVerdict>& verdicts() const { return verdicts_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> bits_;
  uint64_t authorized_count_ = 0;
  std::vector<AccessVerdict> verdicts_;
};

// Classifies all 2^n subsets. With with_witnesses the per-subset verdicts
// (including witnesses) are stored as well, which is limited to n <= 16;
// the packed form is limited to n <= 30.
AccessStructure enumerate_access_structure(const Graph& g, bool with_witnesses = false);

}  // namespace gss
