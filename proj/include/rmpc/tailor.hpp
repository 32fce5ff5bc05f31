#pragma once

#include <cstdint>
#include <vector>

#include "rmpc/pc_matrix.hpp"
#include "rmpc/rng.hpp"

namespace rmpc {

// Minimum-weight dual row through r+2 distinct bit positions: the last entry
// is the base point, the differences to it are completed to an (r+1)-
// dimensional basis, and the affine span is returned as a sorted support of
// size 2^(r+1).
std::vector<int32_t> mwpc_from_positions(int r, int m, const std::vector<int32_t>& positions);

struct ReliabilityPartition {
    std::vector<int32_t> good; // ascending bit index
    std::vector<int32_t> bad;
};

// |good| = round(f*n) most reliable positions by |llr|, half rounded up,
// magnitude ties broken toward the lower index.
ReliabilityPartition classify_bits(const std::vector<double>& llr, double f);

struct TailorResult {
    PcMatrix h;
    bool saturated;  // attempt cap (50*s) hit before s distinct rows appeared
    long attempts;
};

// Sweeps the bad positions round-robin; each attempt anchors one bad bit
// together with r+1 reliable bits drawn uniformly without replacement and
// keeps the resulting row unless it is already present.  Stops the moment
// row s lands, even mid-sweep.
TailorResult build_tailored_matrix(int r, int m, const ReliabilityPartition& part, int s,
                                   Rng& rng);

} // namespace rmpc
