#pragma once

#include <cstdint>
#include <vector>

#include "rmpc/binary_word.hpp"
#include "rmpc/pc_matrix.hpp"

namespace rmpc {

// Number of minimum-weight dual codewords of the order-r length-2^m code:
// indicators of (r+1)-dimensional affine subspaces of F_2^m, counted as
// 2^(m-r-1) times the Gaussian binomial [m, r+1]_2.  Exact integer
// arithmetic throughout; throws std::overflow_error past uint64_t and
// std::invalid_argument unless 0 <= r < m <= 20.
uint64_t count_mwpc(int r, int m);

// Materializes all of them, one indicator vector per (r+1)-flat.  Subspaces
// are enumerated through canonical reduced-echelon bases (one per subspace),
// then shifted through their cosets, so rows are distinct by construction.
// Throws std::length_error when the count exceeds 10^7.
std::vector<BinaryWord> enumerate_mwpc(int r, int m);

PcMatrix full_mwpc_matrix(int r, int m);

} // namespace rmpc
