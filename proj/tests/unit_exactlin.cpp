#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "kwb/exactlin.hpp"

using namespace kwb;

namespace {

SparseMatrix random_matrix(int rows, int cols, double density, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  SparseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (coin(rng) < density) m.set(r, c, Scalar(num(rng)) / Scalar(den(rng)));
  return m;
}

// Independent oracle: textbook dense Gaussian elimination over Q.
int dense_rank(const SparseMatrix& m) {
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols(), Scalar(0)));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!is_zero(a[r][c])) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (is_zero(a[r][c])) continue;
      const Scalar f = a[r][c] / a[rank][c];
      for (int k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rank matches a dense elimination oracle on random matrices") {
  std::mt19937 rng(20260824);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 14);
    const int cols = 1 + static_cast<int>(rng() % 14);
    const double density = 0.1 + 0.1 * static_cast<double>(rng() % 8);
    const SparseMatrix m = random_matrix(rows, cols, density, rng);
    CHECK(rank(m) == dense_rank(m));
  }
}

TEST_CASE("rank on hand-built matrices") {
  SparseMatrix z(5, 3);
  CHECK(rank(z) == 0);
  CHECK(rank(SparseMatrix::identity(6)) == 6);

  SparseMatrix m(3, 3);  // rows 2 and 3 proportional
  m.set(0, 0, Scalar(1));
  m.set(0, 1, Scalar(2));
  m.set(1, 1, Scalar(3));
  m.set(1, 2, Scalar(-1));
  m.set(2, 1, Scalar(6));
  m.set(2, 2, Scalar(-2));
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel basis spans the null space exactly") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 10);
    const int cols = 1 + static_cast<int>(rng() % 12);
    const SparseMatrix m = random_matrix(rows, cols, 0.3, rng);
    const int r = rank(m);
    const auto basis = kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == m.cols() - r);
    SparseMatrix stacked(static_cast<int>(basis.size()), m.cols());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
      CHECK(vec_is_zero(m.apply(basis[i])));
      CHECK_FALSE(basis[i].empty());
      // integral, content-free, positive leading entry
      BigInt content(0);
      for (const auto& [c, v] : basis[i]) {
        CHECK(v.get_den() == 1);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num().get_mpz_t());
      }
      CHECK(content == 1);
      CHECK(sgn(basis[i].begin()->second) > 0);
      for (const auto& [c, v] : basis[i]) stacked.set(i, c, v);
    }
    CHECK(rank(stacked) == static_cast<int>(basis.size()));
  }
}

TEST_CASE("incremental rref agrees with batch rank and reduces the span to zero") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 10);
    const int cols = 1 + static_cast<int>(rng() % 10);
    const SparseMatrix m = random_matrix(rows, cols, 0.4, rng);
    Rref rr;
    for (int r = 0; r < rows; ++r) {
      SparseVec row;
      for (const auto& [rc, v] : m.entries())
        if (rc.first == r) row[rc.second] = v;
      rr.insert(row);
    }
    CHECK(rr.rank() == rank(m));
    // every row, and every random combination of rows, reduces to zero
    for (int r = 0; r < rows; ++r) {
      SparseVec row;
      for (const auto& [rc, v] : m.entries())
        if (rc.first == r) row[rc.second] = v;
      CHECK(rr.contains(row));
    }
    SparseVec combo;
    for (int r = 0; r < rows; ++r) {
      SparseVec row;
      for (const auto& [rc, v] : m.entries())
        if (rc.first == r) row[rc.second] = v;
      axpy(combo, Scalar(static_cast<int>(rng() % 9) - 4), row);
    }
    CHECK(rr.contains(combo));
    // reduce is idempotent
    SparseVec v;
    for (int c = 0; c < cols; ++c)
      if (rng() % 2) v[c] = Scalar(static_cast<int>(rng() % 7) - 3);
    const SparseVec red = rr.reduce(v);
    CHECK(rr.reduce(red) == red);
  }
}

TEST_CASE("homology of small complexes with known answers") {
  // 0 -> Q --id--> Q -> 0 : acyclic
  {
    ChainComplexWindow c;
    c.window = {0, 0, 0, 1};
    c.basis.labels[{1, 0}] = {"e"};
    c.basis.labels[{0, 0}] = {"f"};
    c.diff[{1, 0}] = SparseMatrix::identity(1);
    const HomologyReport h = homology(c);
    CHECK(h.dim({1, 0}) == 0);
    CHECK(h.dim({0, 0}) == 0);
  }
  // zero differential: homology equals the chain dimensions
  {
    ChainComplexWindow c;
    c.window = {0, 0, 0, 2};
    c.basis.labels[{0, 0}] = {"a", "b"};
    c.basis.labels[{2, 0}] = {"c"};
    const HomologyReport h = homology(c);
    CHECK(h.dim({0, 0}) == 2);
    CHECK(h.dim({2, 0}) == 1);
    CHECK(h.dim({1, 0}) == 0);
  }
  // d^2 != 0 must be rejected
  {
    ChainComplexWindow c;
    c.window = {0, 0, 0, 2};
    c.basis.labels[{2, 0}] = {"x"};
    c.basis.labels[{1, 0}] = {"y"};
    c.basis.labels[{0, 0}] = {"z"};
    c.diff[{2, 0}] = SparseMatrix::identity(1);
    c.diff[{1, 0}] = SparseMatrix::identity(1);
    CHECK_THROWS_AS(homology(c), IdentityViolation);
  }
}
