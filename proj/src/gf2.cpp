#include "rmpc/gf2.hpp"

#include <algorithm>

namespace rmpc {

std::vector<BinaryWord> gf2_rref(std::vector<BinaryWord> rows) {
    size_t done = 0;
    if (rows.empty()) return rows;
    int n = rows[0].size();
    for (int col = 0; col < n && done < rows.size(); ++col) {
        size_t pivot = done;
        while (pivot < rows.size() && rows[pivot].get(col) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[done], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != done && rows[i].get(col)) rows[i] ^= rows[done];
        ++done;
    }
    rows.resize(done);
    return rows;
}

int gf2_rank(std::vector<BinaryWord> rows) {
    return int(gf2_rref(std::move(rows)).size());
}

bool gf2_in_span(const std::vector<BinaryWord>& rref_rows, BinaryWord v) {
    for (const auto& row : rref_rows) {
        int p = row.first_set();
        if (p >= 0 && v.get(p)) v ^= row;
    }
    return v.is_zero();
}

} // namespace rmpc
