#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rmpc/binary_word.hpp"

namespace rmpc {

// Sparse parity-check matrix: each row kept as a sorted support list plus a
// column-to-rows adjacency for message passing.  Rows form a set; add_row
// refuses duplicates (hash of the sorted support, then exact compare).
class PcMatrix {
public:
    explicit PcMatrix(int n) : n_(n), var_rows_(n) {}

    int cols() const { return n_; }
    int row_count() const { return int(rows_.size()); }

    bool add_row(std::vector<int32_t> support);

    const std::vector<int32_t>& row(int j) const { return rows_[j]; }
    const std::vector<std::vector<int32_t>>& rows() const { return rows_; }
    const std::vector<int32_t>& rows_on(int i) const { return var_rows_[i]; }

    BinaryWord row_word(int j) const { return BinaryWord::from_support(n_, rows_[j]); }

    long edge_count() const { return edges_; }

    std::string to_alist() const;

private:
    int n_;
    long edges_ = 0;
    std::vector<std::vector<int32_t>> rows_;
    std::vector<std::vector<int32_t>> var_rows_;
    std::unordered_map<uint64_t, std::vector<int32_t>> buckets_;
};

} // namespace rmpc
