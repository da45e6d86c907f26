#ifndef FSING_LA_HPP
#define FSING_LA_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "fsing/errors.hpp"

namespace fsing::la {

// Dense matrix over F_p. Entries are canonical representatives < p on
// every public boundary; elimination keeps unreduced accumulators
// internally (values stay below 2^63 for p < 2^20 and <= 2^24 columns).
using Scalar = std::uint64_t;
using MatF =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVecF = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

// In-place reduced row echelon form. Pivoting is deterministic: columns
// left to right, first usable row. Returns the pivot columns; rows below
// the rank are zeroed.
std::vector<Eigen::Index> rowReduce(MatF& a, std::uint64_t p);

Eigen::Index rankMod(MatF a, std::uint64_t p);

// Basis of {v : a * v^T = 0} as matrix rows (free-variable
// parametrization of the RREF; not itself reduced).
MatF nullspaceRows(const MatF& a, std::uint64_t p);

// Entry-wise (a*b) mod p.
MatF mulMod(const MatF& a, const MatF& b, std::uint64_t p);

// Reduces v against an RREF basis in place; true iff v lies in the row
// span (reduces to zero).
bool reduceAgainst(const MatF& rref, const std::vector<Eigen::Index>& pivots,
                   RowVecF& v, std::uint64_t p);

}  // namespace fsing::la

#endif
