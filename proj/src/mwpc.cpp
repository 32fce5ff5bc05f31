#include "rmpc/mwpc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rmpc {

using u128 = unsigned __int128;

// [n k]_2 via the q-Pascal recurrence; every intermediate is bounded by a
// final table entry, and [20 10]_2 * 2^19 < 2^127, so u128 never overflows
// within the admitted range.
static u128 gaussian_binomial(int n, int k) {
    static thread_local std::vector<std::vector<u128>> table;
    if (int(table.size()) <= n) {
        for (int i = int(table.size()); i <= n; ++i) {
            std::vector<u128> row(i + 1, 1);
            for (int j = 1; j < i; ++j)
                row[j] = table[i - 1][j - 1] + (u128(1) << j) * table[i - 1][j];
            table.push_back(std::move(row));
        }
    }
    return table[n][k];
}

static u128 count_mwpc_wide(int r, int m) {
    if (r < 0 || m < 1 || r >= m || m > 20)
        throw std::invalid_argument("need 0 <= r < m <= 20, got r=" + std::to_string(r) +
                                    " m=" + std::to_string(m));
    return (u128(1) << (m - r - 1)) * gaussian_binomial(m, r + 1);
}

uint64_t count_mwpc(int r, int m) {
    u128 f = count_mwpc_wide(r, m);
    if (f > u128(UINT64_MAX)) throw std::overflow_error("mwpc count exceeds 64 bits");
    return uint64_t(f);
}

std::vector<BinaryWord> enumerate_mwpc(int r, int m) {
    u128 f = count_mwpc_wide(r, m);
    if (f > 10'000'000) throw std::length_error("mwpc enumeration past 10^7 rows");

    int d = r + 1, n = 1 << m;
    std::vector<BinaryWord> out;
    out.reserve(size_t(f));

    // one canonical RREF basis per d-dimensional subspace: choose pivot
    // columns, then sweep the free entries (non-pivot columns right of each
    // row's pivot)
    std::vector<int> pivots(d);
    for (int i = 0; i < d; ++i) pivots[i] = i;
    std::vector<int> stamp(n, -1);
    int generation = 0;
    std::vector<uint32_t> span(size_t(1) << d);
    std::vector<int32_t> coset;

    for (;;) {
        uint32_t pivot_mask = 0;
        for (int p : pivots) pivot_mask |= 1u << p;
        std::vector<std::pair<int, int>> free_slots; // (row, column)
        for (int t = 0; t < d; ++t)
            for (int c = pivots[t] + 1; c < m; ++c)
                if (!(pivot_mask & (1u << c))) free_slots.emplace_back(t, c);

        std::vector<uint32_t> basis(d);
        for (uint64_t assign = 0; assign < (uint64_t(1) << free_slots.size()); ++assign) {
            for (int t = 0; t < d; ++t) basis[t] = 1u << pivots[t];
            for (size_t s = 0; s < free_slots.size(); ++s)
                if ((assign >> s) & 1) basis[free_slots[s].first] |= 1u << free_slots[s].second;

            span[0] = 0;
            for (int t = 0; t < d; ++t)
                for (uint32_t x = 0; x < (1u << t); ++x) span[(1u << t) + x] = span[x] ^ basis[t];

            ++generation;
            for (int v = 0; v < n; ++v) {
                if (stamp[v] == generation) continue;
                coset.clear();
                for (uint32_t s : span) {
                    int p = v ^ int(s);
                    stamp[p] = generation;
                    coset.push_back(int32_t(p));
                }
                std::sort(coset.begin(), coset.end());
                out.push_back(BinaryWord::from_support(n, coset));
            }
        }

        // next pivot combination
        int i = d - 1;
        while (i >= 0 && pivots[i] == m - d + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

PcMatrix full_mwpc_matrix(int r, int m) {
    PcMatrix h(1 << m);
    for (const auto& w : enumerate_mwpc(r, m)) h.add_row(w.support());
    return h;
}

} // namespace rmpc
