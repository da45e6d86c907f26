#include "fsing/la.hpp"

namespace fsing::la {

namespace {

// Lazy accumulation is safe when two full sweeps of axpys (forward
// elimination plus back substitution) cannot overflow a uint64.
bool lazyOk(std::uint64_t p, Eigen::Index cols) {
  const std::uint64_t step = (p - 1) * (p - 1);
  const std::uint64_t budget = (std::uint64_t(1) << 62) / (cols > 0 ? cols : 1);
  return step < budget;
}

void modRow(MatF& a, Eigen::Index r, std::uint64_t p) {
  Scalar* row = a.row(r).data();
  for (Eigen::Index j = 0; j < a.cols(); ++j) row[j] %= p;
}

// row(r) += c * row(src); src must be reduced (< p).
void axpy(MatF& a, Eigen::Index r, Eigen::Index src, Scalar c, std::uint64_t p,
          bool lazy, Eigen::Index fromCol) {
  Scalar* rt = a.row(r).data();
  const Scalar* rs = a.row(src).data();
  const Eigen::Index n = a.cols();
  if (lazy) {
    for (Eigen::Index j = fromCol; j < n; ++j) rt[j] += c * rs[j];
  } else {
    for (Eigen::Index j = fromCol; j < n; ++j) rt[j] = (rt[j] + c * rs[j]) % p;
  }
}

std::uint64_t invMod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and a != 0 mod p.
  std::uint64_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

}  // namespace

std::vector<Eigen::Index> rowReduce(MatF& a, std::uint64_t p) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const bool lazy = lazyOk(p, cols);
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a(r, col) % p != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    a.row(sel).swap(a.row(rank));
    modRow(a, rank, p);
    Scalar inv = invMod(a(rank, col), p);
    if (inv != 1) {
      Scalar* row = a.row(rank).data();
      for (Eigen::Index j = col; j < cols; ++j) row[j] = row[j] * inv % p;
    }
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      Scalar c = a(r, col) % p;
      if (c) axpy(a, r, rank, p - c, p, lazy, col);
      a(r, col) = 0;
    }
    pivots.push_back(col);
    ++rank;
  }
  // Back substitution; sources are re-normalized before use because they
  // may hold lazy accumulators from earlier sweeps.
  for (Eigen::Index i = rank - 1; i >= 0; --i) {
    modRow(a, i, p);
    const Eigen::Index col = pivots[i];
    for (Eigen::Index r = 0; r < i; ++r) {
      Scalar c = a(r, col) % p;
      if (c) axpy(a, r, i, p - c, p, lazy, col);
      a(r, col) = 0;
    }
  }
  for (Eigen::Index r = 0; r < rank; ++r) modRow(a, r, p);
  if (rank < rows) a.bottomRows(rows - rank).setZero();
  return pivots;
}

Eigen::Index rankMod(MatF a, std::uint64_t p) {
  return static_cast<Eigen::Index>(rowReduce(a, p).size());
}

MatF nullspaceRows(const MatF& a, std::uint64_t p) {
  MatF m = a;
  std::vector<Eigen::Index> pivots = rowReduce(m, p);
  const Eigen::Index cols = a.cols();
  const Eigen::Index rank = static_cast<Eigen::Index>(pivots.size());
  std::vector<bool> isPivot(cols, false);
  for (auto c : pivots) isPivot[c] = true;
  MatF k = MatF::Zero(cols - rank, cols);
  Eigen::Index out = 0;
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (isPivot[j]) continue;
    k(out, j) = 1;
    for (Eigen::Index i = 0; i < rank; ++i) {
      Scalar c = m(i, j);
      if (c) k(out, pivots[i]) = p - c;
    }
    ++out;
  }
  return k;
}

MatF mulMod(const MatF& a, const MatF& b, std::uint64_t p) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch");
  const std::uint64_t inner = static_cast<std::uint64_t>(a.cols());
  if (inner > 0 && (p - 1) * (p - 1) >= (std::uint64_t(1) << 63) / inner)
    throw ResourceLimitError("modular product would overflow accumulators");
  MatF c = a * b;
  return c.unaryExpr([p](Scalar v) { return v % p; });
}

bool reduceAgainst(const MatF& rref, const std::vector<Eigen::Index>& pivots,
                   RowVecF& v, std::uint64_t p) {
  const bool lazy = lazyOk(p, v.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Scalar c = v(pivots[i]) % p;
    if (!c) continue;
    Scalar m = p - c;
    if (lazy) {
      v += m * rref.row(i);
    } else {
      for (Eigen::Index j = 0; j < v.cols(); ++j)
        v(j) = (v(j) + m * rref(i, j)) % p;
    }
  }
  bool zero = true;
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    v(j) %= p;
    if (v(j)) zero = false;
  }
  return zero;
}

}  // namespace fsing::la
