#include "rmpc/pc_matrix.hpp"

#include <algorithm>

namespace rmpc {

static uint64_t support_hash(const std::vector<int32_t>& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int32_t v : s) {
        h ^= uint64_t(uint32_t(v));
        h *= 0x100000001b3ull;
    }
    return h;
}

bool PcMatrix::add_row(std::vector<int32_t> support) {
    std::sort(support.begin(), support.end());
    uint64_t h = support_hash(support);
    auto& bucket = buckets_[h];
    for (int32_t j : bucket)
        if (rows_[j] == support) return false;
    int32_t id = int32_t(rows_.size());
    bucket.push_back(id);
    for (int32_t i : support) var_rows_[i].push_back(id);
    edges_ += long(support.size());
    rows_.push_back(std::move(support));
    return true;
}

std::string PcMatrix::to_alist() const {
    size_t max_dv = 0, max_dc = 0;
    for (const auto& adj : var_rows_) max_dv = std::max(max_dv, adj.size());
    for (const auto& row : rows_) max_dc = std::max(max_dc, row.size());

    std::string out;
    out.reserve(size_t(edges_) * 8 + size_t(n_) * 4);
    auto line = [&out](const auto& vals, size_t pad) {
        size_t c = 0;
        for (auto v : vals) {
            if (c++) out += ' ';
            out += std::to_string(v);
        }
        for (; c < pad; ++c) {
            if (c) out += ' ';
            out += '0';
        }
        out += '\n';
    };

    out += std::to_string(n_) + ' ' + std::to_string(rows_.size()) + '\n';
    out += std::to_string(max_dv) + ' ' + std::to_string(max_dc) + '\n';
    std::vector<size_t> deg;
    for (const auto& adj : var_rows_) deg.push_back(adj.size());
    line(deg, 0);
    deg.clear();
    for (const auto& row : rows_) deg.push_back(row.size());
    line(deg, 0);
    std::vector<int32_t> ids;
    for (const auto& adj : var_rows_) {
        ids.clear();
        for (int32_t j : adj) ids.push_back(j + 1);
        line(ids, max_dv);
    }
    for (const auto& row : rows_) {
        ids.clear();
        for (int32_t i : row) ids.push_back(i + 1);
        line(ids, max_dc);
    }
    return out;
}

} // namespace rmpc
