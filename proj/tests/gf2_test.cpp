#include <doctest.h>

#include <random>

#include "gss/gf2.hpp"

using namespace gss;
using namespace gss::gf2;

namespace {

Gf2Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  Gf2Matrix m = Gf2Matrix::zero(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng() & 1u) m.data[static_cast<size_t>(i)].set(j);
  return m;
}

BitVec random_vec(int width, std::mt19937_64& rng) {
  BitVec v(width);
  for (int i = 0; i < width; ++i)
    if (rng() & 1u) v.set(i);
  return v;
}

// Brute force over every candidate vector; the referee for solve_affine.
struct BruteForce {
  bool solvable = false;
  uint64_t solution_count = 0;
};

BruteForce brute_force_solve(const Gf2Matrix& m, const BitVec& rhs) {
  BruteForce out;
  for (uint64_t cand = 0; cand < (uint64_t{1} << m.cols); ++cand) {
    if (m.mul_vec(BitVec::from_mask(cand, m.cols)) == rhs) {
      out.solvable = true;
      ++out.solution_count;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("gf2");

TEST_CASE("row_reduce on fixtures") {
  const auto id = row_reduce(Gf2Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.pivot_cols == std::vector<int>{0, 1, 2});
  CHECK(id.reduced == Gf2Matrix::identity(3));

  const auto zero = row_reduce(Gf2Matrix::zero(3, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.pivot_cols.empty());

  // Third row is the XOR of the first two.
  Gf2Matrix m = Gf2Matrix::zero(0, 3);
  m.append_row(BitVec::from_mask(0b011, 3));  // bits 0,1 -> "110" as written left to right
  m.append_row(BitVec::from_mask(0b110, 3));
  m.append_row(BitVec::from_mask(0b101, 3));
  CHECK(row_reduce(m).rank == 2);
}

TEST_CASE("row_reduce is idempotent and rank-transpose-invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 10);
    const int cols = 1 + static_cast<int>(rng() % 10);
    const Gf2Matrix m = random_matrix(rows, cols, rng);
    const auto red = row_reduce(m);
    const auto again = row_reduce(red.reduced);
    CHECK(again.reduced == red.reduced);
    CHECK(again.rank == red.rank);
    CHECK(again.pivot_cols == red.pivot_cols);
    CHECK(row_reduce(m.transposed()).rank == red.rank);
  }
}

TEST_CASE("solve_affine on fixtures") {
  const Gf2Matrix id = Gf2Matrix::identity(4);
  const BitVec b = BitVec::from_mask(0b1010, 4);
  const auto sol = solve_affine(id, b);
  REQUIRE(sol.has_value());
  CHECK(sol->particular == b);
  CHECK(sol->kernel_basis.empty());

  const auto none = solve_affine(Gf2Matrix::zero(2, 2), BitVec::from_mask(0b01, 2));
  CHECK_FALSE(none.has_value());

  CHECK_THROWS_AS(solve_affine(id, BitVec(3)), std::invalid_argument);
}

TEST_CASE("solve_affine solutions satisfy the system") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Gf2Matrix m = random_matrix(6, 6, rng);
    // Consistent by construction: rhs = m * x0.
    const BitVec x0 = random_vec(6, rng);
    const BitVec rhs = m.mul_vec(x0);
    const auto sol = solve_affine(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m.mul_vec(sol->particular) == rhs);
    for (const auto& basis : sol->kernel_basis) CHECK(m.mul_vec(basis).none());
  }
}

TEST_CASE("solve_affine agrees with brute force on small random systems") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 16);
    const int cols = 1 + static_cast<int>(rng() % 16);
    const Gf2Matrix m = random_matrix(rows, cols, rng);
    const BitVec rhs = random_vec(rows, rng);

    const auto brute = brute_force_solve(m, rhs);
    const auto sol = solve_affine(m, rhs);
    REQUIRE(sol.has_value() == brute.solvable);
    if (sol) {
      CHECK(m.mul_vec(sol->particular) == rhs);
      const int rank = row_reduce(m).rank;
      CHECK(brute.solution_count == uint64_t{1} << (cols - rank));
      CHECK(sol->kernel_basis.size() == static_cast<size_t>(cols - rank));
    }
  }
}

TEST_CASE("kernel basis vectors are linearly independent") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Gf2Matrix m = random_matrix(4, 10, rng);
    const auto sol = solve_affine(m, BitVec(4));
    REQUIRE(sol.has_value());
    Gf2Matrix basis = Gf2Matrix::zero(0, 10);
    for (const auto& v : sol->kernel_basis) basis.append_row(v);
    CHECK(row_reduce(basis).rank == static_cast<int>(sol->kernel_basis.size()));
  }
}

TEST_CASE("enumerate_solutions") {
  const Gf2Matrix id = Gf2Matrix::identity(3);
  const BitVec b = BitVec::from_mask(0b111, 3);
  const auto unique_sol = solve_affine(id, b);
  REQUIRE(unique_sol.has_value());
  const auto only = enumerate_solutions(*unique_sol, 100);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == b);

  // One equation over 3 variables: kernel dimension 2, 4 solutions total.
  Gf2Matrix row = Gf2Matrix::zero(0, 3);
  row.append_row(BitVec::from_mask(0b111, 3));
  BitVec one(1);
  one.set(0);
  const auto sol = solve_affine(row, one);
  REQUIRE(sol.has_value());
  CHECK(sol->kernel_basis.size() == 2);

  const auto all = enumerate_solutions(*sol, 100);
  REQUIRE(all.size() == 4);
  for (const auto& v : all) CHECK(row.mul_vec(v) == one);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);

  CHECK(enumerate_solutions(*sol, 3).size() == 3);
  CHECK(enumerate_solutions(*sol, 0).empty());
}

TEST_SUITE_END();
