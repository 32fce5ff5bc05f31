#include "rmpc/tailor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rmpc/mwpc.hpp"

namespace rmpc {

// rref over m-bit masks, bit 0 leftmost; returns the rank, zero rows sink
static int mask_rref(std::vector<uint32_t>& rows, int m) {
    int done = 0, nrows = int(rows.size());
    for (int c = 0; c < m && done < nrows; ++c) {
        int pivot = done;
        while (pivot < nrows && !((rows[pivot] >> c) & 1)) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[done], rows[pivot]);
        for (int i = 0; i < nrows; ++i)
            if (i != done && ((rows[i] >> c) & 1)) rows[i] ^= rows[done];
        ++done;
    }
    return done;
}

static bool mask_in_span(const std::vector<uint32_t>& rows, int m, uint32_t v) {
    std::vector<uint32_t> a(rows);
    int without = mask_rref(a, m);
    a.assign(rows.begin(), rows.end());
    a.push_back(v);
    return mask_rref(a, m) == without;
}

std::vector<int32_t> mwpc_from_positions(int r, int m, const std::vector<int32_t>& positions) {
    if (r < 0 || r >= m || m > 20) throw std::invalid_argument("need 0 <= r < m <= 20");
    int n = 1 << m, d = r + 1;
    if (int(positions.size()) != r + 2)
        throw std::invalid_argument("need r+2 positions");
    for (size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || positions[i] >= n)
            throw std::invalid_argument("position out of range");
        for (size_t j = i + 1; j < positions.size(); ++j)
            if (positions[i] == positions[j]) throw std::invalid_argument("repeated position");
    }

    uint32_t base = uint32_t(positions[r + 1]);
    std::vector<uint32_t> rows(d);
    for (int j = 0; j < d; ++j) rows[j] = uint32_t(positions[j]) ^ base;
    int rank = mask_rref(rows, m);

    // Complete to rank r+1.  Preference follows the construction sweep: the
    // first column that is not a unit vector of the current matrix.  A unit
    // row only enters if it enlarges the span; degenerate inputs exist where
    // every column looks like a unit vector (or where the preferred column
    // repeats), and the span test keeps those from stalling or collapsing.
    for (int z = rank; z < d; ++z) {
        std::vector<uint32_t> nonzero(rows.begin(), rows.begin() + z);
        int chosen = -1;
        for (int pass = 0; pass < 2 && chosen < 0; ++pass) {
            for (int c = 0; c < m; ++c) {
                int ones = 0;
                for (int t = 0; t < d; ++t) ones += (rows[t] >> c) & 1;
                if (pass == 0 && ones == 1) continue; // unit column, skipped on the first pass
                if (mask_in_span(nonzero, m, 1u << c)) continue;
                chosen = c;
                break;
            }
        }
        rows[z] = 1u << chosen; // a usable column always exists while rank < m
    }

    std::vector<int32_t> support(size_t(1) << d);
    support[0] = int32_t(base);
    for (int t = 0; t < d; ++t)
        for (int32_t x = 0; x < (1 << t); ++x)
            support[(1 << t) + x] = support[x] ^ int32_t(rows[t]);
    std::sort(support.begin(), support.end());
    return support;
}

ReliabilityPartition classify_bits(const std::vector<double>& llr, double f) {
    int n = int(llr.size());
    if (f < 0.0 || f > 1.0) throw std::invalid_argument("f outside [0,1]");
    int g = int(std::floor(f * n + 0.5));
    std::vector<int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&llr](int32_t a, int32_t b) {
        return std::fabs(llr[a]) > std::fabs(llr[b]);
    });
    ReliabilityPartition part;
    part.good.assign(order.begin(), order.begin() + g);
    part.bad.assign(order.begin() + g, order.end());
    std::sort(part.good.begin(), part.good.end());
    std::sort(part.bad.begin(), part.bad.end());
    return part;
}

TailorResult build_tailored_matrix(int r, int m, const ReliabilityPartition& part, int s,
                                   Rng& rng) {
    int n = 1 << m;
    if (int(part.good.size()) < r + 1)
        throw std::invalid_argument("fewer than r+1 reliable positions");
    if (part.bad.empty()) throw std::invalid_argument("no unreliable positions");
    if (s < 1) throw std::invalid_argument("matrix size must be positive");
    if (uint64_t(s) > count_mwpc(r, m))
        throw std::invalid_argument("matrix size exceeds the dual codeword count");

    TailorResult res{PcMatrix(n), false, 0};
    long cap = 50L * s;
    std::vector<int32_t> pos(r + 2), pool;
    while (res.h.row_count() < s) {
        for (int32_t b : part.bad) {
            if (res.h.row_count() == s) break;
            if (res.attempts == cap) {
                res.saturated = true;
                return res;
            }
            ++res.attempts;
            pool = part.good;
            for (int t = 0; t <= r; ++t) {
                size_t pick = size_t(t) + size_t(rng.uniform_below(pool.size() - t));
                std::swap(pool[t], pool[pick]);
                pos[t] = pool[t];
            }
            pos[r + 1] = b;
            res.h.add_row(mwpc_from_positions(r, m, pos));
        }
    }
    return res;
}

} // namespace rmpc
