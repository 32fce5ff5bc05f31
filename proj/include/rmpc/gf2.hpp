#pragma once

#include <vector>

#include "rmpc/binary_word.hpp"

namespace rmpc {

int gf2_rank(std::vector<BinaryWord> rows);

// Reduced row echelon form with bit 0 as the leftmost column.  Zero rows are
// dropped; surviving rows are ordered by ascending pivot and each pivot column
// is cleared in every other row.
std::vector<BinaryWord> gf2_rref(std::vector<BinaryWord> rows);

// Membership test against rows already in row echelon form.
bool gf2_in_span(const std::vector<BinaryWord>& rref_rows, BinaryWord v);

} // namespace rmpc
