#include "gss/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gss::gf2 {

Gf2Matrix Gf2Matrix::zero(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Gf2Matrix: negative dimension");
  Gf2Matrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(static_cast<size_t>(rows), BitVec(cols));
  return m;
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.data[static_cast<size_t>(i)].set(i);
  return m;
}

void Gf2Matrix::append_row(BitVec row) {
  if (row.size() != cols) throw std::invalid_argument("Gf2Matrix: row width mismatch");
  data.push_back(std::move(row));
  ++rows;
}

BitVec Gf2Matrix::mul_vec(const BitVec& x) const {
  if (x.size() != cols) throw std::invalid_argument("Gf2Matrix::mul_vec: dimension mismatch");
  BitVec y(rows);
  for (int i = 0; i < rows; ++i)
    if (data[static_cast<size_t>(i)].dot(x)) y.set(i);
  return y;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t = zero(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j : data[static_cast<size_t>(i)].indices()) t.data[static_cast<size_t>(j)].set(i);
  return t;
}

RowReduction row_reduce(const Gf2Matrix& m) {
  RowReduction r{m, 0, {}};
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < m.rows; ++i) {
      if (r.reduced.data[static_cast<size_t>(i)].get(col)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(r.reduced.data[static_cast<size_t>(pivot_row)], r.reduced.data[static_cast<size_t>(sel)]);
    for (int i = 0; i < m.rows; ++i) {
      if (i != pivot_row && r.reduced.data[static_cast<size_t>(i)].get(col))
        r.reduced.data[static_cast<size_t>(i)] ^= r.reduced.data[static_cast<size_t>(pivot_row)];
    }
    r.pivot_cols.push_back(col);
    ++pivot_row;
  }
  r.rank = static_cast<int>(r.pivot_cols.size());
  return r;
}

namespace {

// Widens v to new_width, keeping existing bits in place.
BitVec widen(const BitVec& v, int new_width) {
  BitVec out(new_width);
  for (int i : v.indices()) out.set(i);
  return out;
}

}  // namespace

std::optional<AffineSolution> solve_affine(const Gf2Matrix& m, const BitVec& rhs) {
  if (rhs.size() != m.rows) throw std::invalid_argument("solve_affine: rhs length != rows");

  Gf2Matrix aug = Gf2Matrix::zero(0, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    BitVec row = widen(m.data[static_cast<size_t>(i)], m.cols + 1);
    if (rhs.get(i)) row.set(m.cols);
    aug.append_row(std::move(row));
  }

  RowReduction red = row_reduce(aug);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols) return std::nullopt;

  AffineSolution sol;
  sol.particular = BitVec(m.cols);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (size_t t = 0; t < red.pivot_cols.size(); ++t) {
    const int p = red.pivot_cols[t];
    is_pivot[static_cast<size_t>(p)] = true;
    if (red.reduced.data[t].get(m.cols)) sol.particular.set(p);
  }

  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    BitVec basis(m.cols);
    basis.set(f);
    for (size_t t = 0; t < red.pivot_cols.size(); ++t)
      if (red.reduced.data[t].get(f)) basis.set(red.pivot_cols[t]);
    sol.kernel_basis.push_back(std::move(basis));
  }
  return sol;
}

std::vector<BitVec> enumerate_solutions(const AffineSolution& sol, uint64_t limit) {
  const size_t dim = sol.kernel_basis.size();
  uint64_t total = limit;
  if (dim < 64) total = std::min<uint64_t>(limit, uint64_t{1} << dim);

  std::vector<BitVec> out;
  out.reserve(static_cast<size_t>(std::min<uint64_t>(total, 1u << 20)));
  for (uint64_t mask = 0; mask < total; ++mask) {
    BitVec v = sol.particular;
    uint64_t rest = mask;
    while (rest) {
      const int j = std::countr_zero(rest);
      v ^= sol.kernel_basis[static_cast<size_t>(j)];
      rest &= rest - 1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gss::gf2
