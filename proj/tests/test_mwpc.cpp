#include "doctest.h"

#include <set>
#include <stdexcept>

#include "rmpc/mwpc.hpp"
#include "rmpc/rm_code.hpp"

using namespace rmpc;

TEST_CASE("minimum-weight dual codeword counts, exact") {
    CHECK(count_mwpc(2, 5) == 620);
    CHECK(count_mwpc(2, 7) == 188976);
    CHECK(count_mwpc(3, 7) == 94488);
    CHECK(count_mwpc(4, 7) == 10668);
    // affine 1-flats of F_2^3 are unordered point pairs: C(8,2)
    CHECK(count_mwpc(0, 3) == 28);
    CHECK(count_mwpc(1, 3) == 14);
    CHECK(count_mwpc(2, 3) == 1);
    CHECK_THROWS_AS(count_mwpc(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_mwpc(1, 21), std::invalid_argument);
}

TEST_CASE("enumeration of the length-2 repetition dual") {
    auto rows = enumerate_mwpc(0, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].support() == std::vector<int32_t>{0, 1});
}

TEST_CASE("length-32 order-2 enumeration matches exhaustive dual search") {
    auto code = build_code(2, 5);
    auto rows = enumerate_mwpc(2, 5);
    REQUIRE(rows.size() == 620);
    std::set<std::vector<int32_t>> produced;
    for (const auto& w : rows) {
        CHECK(w.weight() == 8);
        for (const auto& g : code.gen) CHECK(g.dot(w) == 0);
        produced.insert(w.support());
    }
    CHECK(produced.size() == 620); // pairwise distinct

    // independent oracle: walk all 2^16 dual codewords (dual = row space of
    // h_ref) and keep the weight-8 ones
    std::set<std::vector<int32_t>> expected;
    int dual_k = int(code.h_ref.size());
    REQUIRE(dual_k == 16);
    BinaryWord acc(code.n);
    for (uint32_t g = 1; g < (1u << dual_k); ++g) {
        // Gray walk: exactly one row toggles per step
        uint32_t gray = g ^ (g >> 1), prev = (g - 1) ^ ((g - 1) >> 1);
        acc ^= code.h_ref[std::countr_zero(gray ^ prev)];
        if (acc.weight() == 8) expected.insert(acc.support());
    }
    CHECK(expected.size() == 620);
    CHECK(produced == expected);
}

TEST_CASE("enumeration count matches the closed form for every small order") {
    for (int m = 1; m <= 7; ++m)
        for (int r = 0; r < m; ++r) {
            auto rows = enumerate_mwpc(r, m);
            CHECK(rows.size() == count_mwpc(r, m));
            for (const auto& w : rows) CHECK(w.weight() == (1 << (r + 1)));
        }
}

TEST_CASE("enumeration refuses counts past the materialization cap") {
    CHECK_THROWS_AS(enumerate_mwpc(2, 9), std::length_error); // 50,411,520 rows
}

TEST_CASE("duplicate rows are rejected by the sparse matrix") {
    PcMatrix h(8);
    CHECK(h.add_row({3, 1, 5}));
    CHECK(!h.add_row({1, 3, 5}));
    CHECK(h.add_row({1, 3, 6}));
    CHECK(h.row_count() == 2);
    CHECK(h.row(0) == std::vector<int32_t>{1, 3, 5}); // stored sorted
}

TEST_CASE("column adjacency stays consistent with rows") {
    auto rows = enumerate_mwpc(1, 4);
    PcMatrix h(16);
    for (const auto& w : rows) h.add_row(w.support());
    long edges_from_rows = 0, edges_from_cols = 0;
    for (int j = 0; j < h.row_count(); ++j) {
        edges_from_rows += long(h.row(j).size());
        for (int32_t i : h.row(j)) {
            const auto& adj = h.rows_on(i);
            CHECK(std::find(adj.begin(), adj.end(), j) != adj.end());
        }
    }
    for (int i = 0; i < h.cols(); ++i) edges_from_cols += long(h.rows_on(i).size());
    CHECK(edges_from_rows == edges_from_cols);
}

TEST_CASE("alist serialization of a small matrix") {
    PcMatrix h(4);
    h.add_row({0, 1});
    h.add_row({1, 2, 3});
    CHECK(h.to_alist() ==
          "4 2\n"
          "2 3\n"
          "1 2 1 1\n"
          "2 3\n"
          "1 0\n"
          "1 2\n"
          "2 0\n"
          "2 0\n"
          "1 2 0\n"
          "2 3 4\n");
}

TEST_CASE("full matrix helper carries every enumerated row") {
    auto h = full_mwpc_matrix(2, 5);
    CHECK(h.row_count() == 620);
    CHECK(h.cols() == 32);
    for (int i = 0; i < h.cols(); ++i)
        CHECK(h.rows_on(i).size() == 620u * 8 / 32); // point-transitive symmetry
}
