#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gss/bitvec.hpp"

namespace gss::gf2 {

// Dense bit matrix over GF(2); data[i] is row i, each of width cols.
struct Gf2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<BitVec> data;

  static Gf2Matrix zero(int rows, int cols);
  static Gf2Matrix identity(int n);

  // row.size() must equal cols.
  void append_row(BitVec row);

  // Length-rows product m*x.
  BitVec mul_vec(const BitVec& x) const;

  Gf2Matrix transposed() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
};

struct RowReduction {
  Gf2Matrix reduced;            // reduced row-echelon form
  int rank = 0;                 // number of nonzero rows
  std::vector<int> pivot_cols;  // strictly increasing
};

RowReduction row_reduce(const Gf2Matrix& m);

// One solution of m*x = rhs together with a basis of the kernel of m. The
// full solution set is particular + span(kernel_basis), of size
// 2^|kernel_basis|.
struct AffineSolution {
  BitVec particular;
  std::vector<BitVec> kernel_basis;
};

// Empty iff the augmented system is inconsistent (rank(m) < rank(m|rhs)).
// The particular solution sets every free variable to zero, so callers get
// deterministic, reproducible witnesses.
std::optional<AffineSolution> solve_affine(const Gf2Matrix& m, const BitVec& rhs);

// particular XOR combinations of kernel basis vectors, in increasing order
// of the combination mask (bit j of the mask selects kernel_basis[j]), up to
// `limit` vectors.
std::vector<BitVec> enumerate_solutions(const AffineSolution& sol, uint64_t limit);

}  // namespace gss::gf2
