#include <doctest.h>

#include <random>

#include "fsing/la.hpp"

using namespace fsing;
using la::MatF;

namespace {

MatF randomMatrix(std::mt19937& rng, Eigen::Index rows, Eigen::Index cols,
                  std::uint64_t p) {
  MatF m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng() % p;
  return m;
}

// Textbook elimination with eager reduction at every step.
Eigen::Index naiveRank(MatF a, std::uint64_t p) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, col) % p != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    a.row(sel).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      while (a(r, col) % p != 0)
        for (Eigen::Index j = col; j < cols; ++j)
          a(r, j) = (a(r, j) + a(rank, j)) % p;
    }
    ++rank;
  }
  return rank;
}

bool isRref(const MatF& m, const std::vector<Eigen::Index>& pivots,
            std::uint64_t p) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (m(i, pivots[i]) != 1) return false;
    for (Eigen::Index j = 0; j < pivots[i]; ++j)
      if (m(i, j) != 0) return false;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (r != i && m(r, pivots[i]) != 0) return false;
    if (i > 0 && pivots[i] <= pivots[i - 1]) return false;
  }
  for (Eigen::Index i = pivots.size(); i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) % p != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("la") {

TEST_CASE("row reduction produces a reduced echelon form") {
  std::mt19937 rng(17);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 65521ull}) {
    for (int round = 0; round < 12; ++round) {
      Eigen::Index rows = 1 + rng() % 12, cols = 1 + rng() % 12;
      MatF a = randomMatrix(rng, rows, cols, p);
      MatF reduced = a;
      auto pivots = la::rowReduce(reduced, p);
      CHECK(isRref(reduced, pivots, p));
      if (p <= 7)  // the oracle adds the pivot row up to p times per cell
        CHECK(static_cast<Eigen::Index>(pivots.size()) == naiveRank(a, p));
      // Idempotence.
      MatF twice = reduced;
      auto pivots2 = la::rowReduce(twice, p);
      CHECK(pivots2 == pivots);
      CHECK((twice.array() == reduced.array()).all());
    }
  }
}

TEST_CASE("nullspace rows annihilate the matrix") {
  std::mt19937 rng(23);
  for (std::uint64_t p : {2ull, 3ull, 7ull}) {
    for (int round = 0; round < 12; ++round) {
      Eigen::Index rows = 1 + rng() % 10, cols = 1 + rng() % 10;
      MatF a = randomMatrix(rng, rows, cols, p);
      MatF k = la::nullspaceRows(a, p);
      CHECK(k.rows() == cols - la::rankMod(a, p));
      if (k.rows() > 0) {
        MatF prod = la::mulMod(a, MatF(k.transpose()), p);
        CHECK((prod.array() == 0).all());
        // The kernel basis itself has full rank.
        CHECK(la::rankMod(k, p) == k.rows());
      }
    }
  }
}

TEST_CASE("membership reduction against an echelon basis") {
  std::mt19937 rng(31);
  const std::uint64_t p = 5;
  MatF a = randomMatrix(rng, 4, 8, p);
  MatF basis = a;
  auto pivots = la::rowReduce(basis, p);
  basis.conservativeResize(static_cast<Eigen::Index>(pivots.size()), 8);

  // Random combinations of the rows reduce to zero.
  for (int round = 0; round < 10; ++round) {
    la::RowVecF v = la::RowVecF::Zero(8);
    for (Eigen::Index i = 0; i < basis.rows(); ++i)
      v += (rng() % p) * basis.row(i);
    v = v.unaryExpr([&](la::Scalar x) { return x % p; });
    CHECK(la::reduceAgainst(basis, pivots, v, p));
  }
  // A vector outside the row space does not.
  if (pivots.size() < 8) {
    la::RowVecF v = la::RowVecF::Zero(8);
    for (Eigen::Index j = 0; j < 8; ++j) {
      bool isPivot = false;
      for (auto c : pivots) isPivot |= (c == j);
      if (!isPivot) {
        v(j) = 1;
        break;
      }
    }
    CHECK_FALSE(la::reduceAgainst(basis, pivots, v, p));
  }
}

TEST_CASE("modular product guards overflow") {
  MatF a = MatF::Zero(2, 2), b = MatF::Zero(2, 3);
  CHECK(la::mulMod(a, b, 7).cols() == 3);
  CHECK_THROWS_AS(la::mulMod(a, MatF::Zero(3, 2), 7), InvalidArgument);
}

}  // TEST_SUITE
