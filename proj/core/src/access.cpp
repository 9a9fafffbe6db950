#include "gss/access.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gss/gf2.hpp"
#include "parallel.hpp"

namespace gss {

namespace {

void check_set(const Graph& g, const VertexSet& b) {
  if (b.size() != g.order())
    throw std::invalid_argument("access: vertex set width does not match graph order");
}

BitVec system_row(const Graph& g, int u, const RowFault* fault) {
  BitVec row = g.neighbours(u);
  if (fault && fault->u == u) row.flip(fault->v);
  return row;
}

// Restriction of `row` to the variable set `vars` (ascending vertex indices).
BitVec compress(const BitVec& row, const std::vector<int>& vars) {
  BitVec out(static_cast<int>(vars.size()));
  for (size_t j = 0; j < vars.size(); ++j)
    if (row.get(vars[j])) out.set(static_cast<int>(j));
  return out;
}

VertexSet expand(const BitVec& compact, const std::vector<int>& vars, int n) {
  VertexSet out(n);
  for (int j : compact.indices()) out.set(vars[static_cast<size_t>(j)]);
  return out;
}

// Membership system for Definition-style access: variables x_v over v in b,
// |N(u) ∩ D| even for u outside b, |D| odd.
std::optional<gf2::AffineSolution> solve_membership(const Graph& g, const VertexSet& b,
                                                    const RowFault* fault,
                                                    std::vector<int>* vars_out) {
  const int n = g.order();
  const std::vector<int> vars = b.indices();
  gf2::Gf2Matrix m = gf2::Gf2Matrix::zero(0, static_cast<int>(vars.size()));
  std::vector<bool> rhs_bits;
  for (int u = 0; u < n; ++u) {
    if (b.get(u)) continue;
    m.append_row(compress(system_row(g, u, fault), vars));
    rhs_bits.push_back(false);
  }
  BitVec ones(static_cast<int>(vars.size()));
  for (int j = 0; j < ones.size(); ++j) ones.set(j);
  m.append_row(std::move(ones));
  rhs_bits.push_back(true);

  BitVec rhs(m.rows);
  for (int i = 0; i < m.rows; ++i)
    if (rhs_bits[static_cast<size_t>(i)]) rhs.set(i);

  if (vars_out) *vars_out = vars;
  return gf2::solve_affine(m, rhs);
}

// Dual system: variables y_v over v outside b, |N(u) ∩ C| odd for u in b.
std::optional<gf2::AffineSolution> solve_dual(const Graph& g, const VertexSet& b,
                                              const RowFault* fault,
                                              std::vector<int>* vars_out) {
  const std::vector<int> vars = b.complement().indices();
  gf2::Gf2Matrix m = gf2::Gf2Matrix::zero(0, static_cast<int>(vars.size()));
  for (int u : b.indices()) m.append_row(compress(system_row(g, u, fault), vars));
  BitVec rhs(m.rows);
  for (int i = 0; i < m.rows; ++i) rhs.set(i);
  if (vars_out) *vars_out = vars;
  return gf2::solve_affine(m, rhs);
}

}  // namespace

AccessVerdict is_c_accessing(const Graph& g, const VertexSet& b) {
  check_set(g, b);
  std::vector<int> vars;
  if (auto sol = solve_membership(g, b, nullptr, &vars)) {
    AccessVerdict v{b, AccessStatus::Authorized, expand(sol->particular, vars, g.order()),
                    std::nullopt};
    return v;
  }
  auto dual = find_dual_witness(g, b);
  if (!dual)
    throw std::logic_error(
        "is_c_accessing: set is not accessing yet has no dual witness; "
        "the solver is broken");
  return AccessVerdict{b, AccessStatus::Forbidden, std::nullopt, std::move(*dual)};
}

std::optional<VertexSet> find_dual_witness(const Graph& g, const VertexSet& b) {
  check_set(g, b);
  std::vector<int> vars;
  auto sol = solve_dual(g, b, nullptr, &vars);
  if (!sol) return std::nullopt;
  return expand(sol->particular, vars, g.order());
}

bool is_minimal_authorized(const Graph& g, const VertexSet& b) {
  check_set(g, b);
  if (!is_c_accessing(g, b).authorized()) return false;
  for (int v : b.indices()) {
    VertexSet smaller = b;
    smaller.set(v, false);
    if (is_c_accessing(g, smaller).authorized()) return false;
  }
  return true;
}

AccessStatus access_status_under_fault(const Graph& g, const VertexSet& b,
                                       const RowFault& fault) {
  check_set(g, b);
  if (fault.u < 0 || fault.u >= g.order() || fault.v < 0 || fault.v >= g.order())
    throw std::out_of_range("access_status_under_fault: fault position out of range");
  return solve_membership(g, b, &fault, nullptr) ? AccessStatus::Authorized
                                                 : AccessStatus::Forbidden;
}

AccessStructure::AccessStructure(int n, std::vector<uint64_t> authorized_bits,
                                 std::vector<AccessVerdict> verdicts)
    : n_(n), bits_(std::move(authorized_bits)), verdicts_(std::move(verdicts)) {
  for (uint64_t w : bits_) authorized_count_ += static_cast<uint64_t>(std::popcount(w));
}

bool AccessStructure::authorized(uint64_t subset_mask) const {
  if (subset_mask >= subset_count())
    throw std::out_of_range("AccessStructure: subset mask out of range");
  return (bits_[subset_mask >> 6] >> (subset_mask & 63)) & 1u;
}

std::vector<VertexSet> AccessStructure::minimal_authorized_sets() const {
  std::vector<uint64_t> masks;
  for (uint64_t mask = 0; mask < subset_count(); ++mask) {
    if (!authorized(mask)) continue;
    bool minimal = true;
    for (uint64_t rest = mask; rest; rest &= rest - 1) {
      const uint64_t lowest = rest & (~rest + 1);
      if (authorized(mask ^ lowest)) {
        minimal = false;
        break;
      }
    }
    if (minimal) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (uint64_t m : masks) out.push_back(VertexSet::from_mask(m, n_));
  return out;
}

AccessStructure enumerate_access_structure(const Graph& g, bool with_witnesses) {
  const int n = g.order();
  if (n > 30)
    throw std::invalid_argument("enumerate_access_structure: 2^n subsets is infeasible for n > 30");
  if (with_witnesses && n > 16)
    throw std::invalid_argument("enumerate_access_structure: witness mode is limited to n <= 16");

  const uint64_t total = uint64_t{1} << n;
  std::vector<uint64_t> bits((total + 63) / 64, 0);
  std::vector<AccessVerdict> verdicts;
  if (with_witnesses) verdicts.resize(total);

  // Chunks are multiples of 64 subsets so each packed word has one writer.
  detail::parallel_for_chunks(total, 64, [&](uint64_t begin, uint64_t end) {
    for (uint64_t mask = begin; mask < end; ++mask) {
      const VertexSet b = VertexSet::from_mask(mask, n);
      if (with_witnesses) {
        verdicts[mask] = is_c_accessing(g, b);
        if (verdicts[mask].authorized()) bits[mask >> 6] |= uint64_t{1} << (mask & 63);
      } else if (solve_membership(g, b, nullptr, nullptr)) {
        bits[mask >> 6] |= uint64_t{1} << (mask & 63);
      }
    }
  });

  return AccessStructure(n, std::move(bits), std::move(verdicts));
}

}  // namespace gss
