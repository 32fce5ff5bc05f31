#pragma once

#include <cstdint>
#include <vector>

#include "rmpc/binary_word.hpp"

namespace rmpc {

struct CodeParams {
    int n;
    int k;
    int d_min;
    int dual_d_min; // meaningful for r < m
};

// Column c of the generator evaluates every monomial at the point whose
// coordinate j is bit j of c (bit 0 first).  That indexing convention is
// shared by everything downstream that maps bit positions to points.
struct RmCode {
    int r = 0;
    int m = 0;
    int n = 0;
    int k = 0;
    int d_min = 0;
    int dual_d_min = 0;
    std::vector<BinaryWord> gen;   // k rows; monomials graded by degree, then
                                   // lexicographic by variable index set
    std::vector<BinaryWord> h_ref; // n-k independent dual rows, RREF
};

CodeParams code_params(int r, int m); // throws std::invalid_argument unless 0 <= r <= m <= 14

RmCode build_code(int r, int m);

BinaryWord encode(const RmCode& code, const BinaryWord& u); // u has k bits

bool is_codeword(const RmCode& code, const BinaryWord& w);

} // namespace rmpc
