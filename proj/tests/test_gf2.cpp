#include <doctest.h>

#include "support.hpp"

using namespace icode;

TEST_CASE("rank basics") {
    CHECK(rank(BinMatrix::identity(3)) == 3);
    BinMatrix ones(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.set(i, j, true);
    CHECK(rank(ones) == 1);
    // rank 3 completion from the running 4x4 example
    BinMatrix f1 = BinMatrix::from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}});
    CHECK(rank(f1) == 3);
}

TEST_CASE("rank is invariant under row and column permutations") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 200; ++trial) {
        BinMatrix m = testutil::random_bin(rng, 6, 6);
        std::vector<int> rp(6), cp(6);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        BinMatrix permuted = apply_perm(apply_perm(m, Permutation(rp), Axis::Rows), Permutation(cp), Axis::Cols);
        CHECK(rank(permuted) == rank(m));
    }
}

TEST_CASE("solve_left identity and contradiction cases") {
    BinMatrix id2 = BinMatrix::identity(2);
    auto d = solve_left(id2, {0}, {1});
    REQUIRE(d.has_value());
    CHECK(*d == BitRow{1, 0});

    BinMatrix row = BinMatrix::from_rows({{1, 1}});
    CHECK_FALSE(solve_left(row, {0}, {1}).has_value());

    CHECK_THROWS_AS(solve_left(id2, {0}, {5}), std::invalid_argument);
    CHECK_THROWS_AS(solve_left(id2, {0}, {0}), std::invalid_argument);
}

TEST_CASE("solve_left on the Example 5 encoder") {
    BinMatrix enc = testutil::bin("ex5_enc.bin");
    // brute-force oracle over all 2^6 candidate vectors
    auto oracle = [&](const std::vector<int>& ones, const std::vector<int>& zeros) -> std::optional<BitRow> {
        for (std::uint64_t v = 0; v < (1u << 6); ++v) {
            BitRow d(6);
            for (int i = 0; i < 6; ++i) d[i] = (v >> i) & 1;
            BitRow prod = d * enc;
            bool ok = true;
            for (int c : ones) ok = ok && prod[c] == 1;
            for (int c : zeros) ok = ok && prod[c] == 0;
            if (ok) return d;
        }
        return std::nullopt;
    };
    std::vector<int> ones{4}, zeros{2, 3, 6, 7, 8};
    auto got = solve_left(enc, ones, zeros);
    auto expected = oracle(ones, zeros);
    REQUIRE(expected.has_value());
    REQUIRE(got.has_value());
    BitRow prod = *got * enc;
    for (int c : ones) CHECK(prod[c] == 1);
    for (int c : zeros) CHECK(prod[c] == 0);
}

TEST_CASE("solve_left solutions always satisfy the requested pattern") {
    std::mt19937_64 rng(7002);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        int m = 1 + static_cast<int>(rng() % 6);
        BinMatrix g = testutil::random_bin(rng, r, m);
        std::vector<int> ones, zeros;
        for (int c = 0; c < m; ++c) {
            switch (rng() % 3) {
                case 0: ones.push_back(c); break;
                case 1: zeros.push_back(c); break;
                default: break;
            }
        }
        auto d = solve_left(g, ones, zeros);
        if (!d) continue;
        ++found;
        BitRow prod = *d * g;
        for (int c : ones) CHECK(prod[c] == 1);
        for (int c : zeros) CHECK(prod[c] == 0);
    }
    CHECK(found > 0);
}

TEST_CASE("row_space_contains basics and rank oracle") {
    BinMatrix id2 = BinMatrix::identity(2);
    CHECK(row_space_contains(id2, {1, 1}));
    BinMatrix single = BinMatrix::from_rows({{1, 0}});
    CHECK_FALSE(row_space_contains(single, {0, 1}));
    CHECK_THROWS_AS(row_space_contains(single, {0, 1, 1}), std::invalid_argument);

    // the dependent fourth row of the Example 5 component completion
    BinMatrix f1_top = BinMatrix::from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    CHECK(row_space_contains(f1_top, {1, 0, 0, 1}));

    std::mt19937_64 rng(7003);
    for (int trial = 0; trial < 300; ++trial) {
        BinMatrix m = testutil::random_bin(rng, 1 + rng() % 5, 1 + rng() % 6);
        BitRow v(m.cols());
        for (auto& b : v) b = rng() & 1;
        BinMatrix stacked(m.rows() + 1, m.cols());
        for (int i = 0; i < m.rows(); ++i) stacked.xor_row_from(i, m, i);
        stacked.set_row(m.rows(), v);
        CHECK(row_space_contains(m, v) == (rank(stacked) == rank(m)));
    }
}

TEST_CASE("apply_perm involution and swap") {
    BinMatrix id2 = BinMatrix::identity(2);
    Permutation swap01({1, 0});
    BinMatrix swapped = apply_perm(id2, swap01, Axis::Rows);
    CHECK(swapped == BinMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(apply_perm(swapped, swap01.inverse(), Axis::Rows) == id2);

    std::mt19937_64 rng(7004);
    for (int trial = 0; trial < 100; ++trial) {
        BinMatrix m = testutil::random_bin(rng, 4, 5);
        std::vector<int> map(4);
        std::iota(map.begin(), map.end(), 0);
        std::shuffle(map.begin(), map.end(), rng);
        Permutation p(map);
        CHECK(apply_perm(apply_perm(m, p, Axis::Rows), p.inverse(), Axis::Rows) == m);
    }
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_perm(id2, Permutation({0, 2, 1}), Axis::Rows), std::invalid_argument);
}

TEST_CASE("assemble and extract blocks round-trip") {
    BlockDims dims{{1}, {1}};
    BinMatrix one(1, 1);
    one.set(0, 0, true);
    CHECK(assemble_blocks(dims, {{one}}) == one);

    std::mt19937_64 rng(7005);
    for (int trial = 0; trial < 100; ++trial) {
        int br = 1 + rng() % 3, bc = 1 + rng() % 3;
        BlockDims d;
        for (int i = 0; i < br; ++i) d.row_heights.push_back(1 + rng() % 3);
        for (int j = 0; j < bc; ++j) d.col_widths.push_back(1 + rng() % 3);
        std::vector<std::vector<BinMatrix>> blocks;
        for (int i = 0; i < br; ++i) {
            std::vector<BinMatrix> row;
            for (int j = 0; j < bc; ++j) row.push_back(testutil::random_bin(rng, d.row_heights[i], d.col_widths[j]));
            blocks.push_back(std::move(row));
        }
        BinMatrix whole = assemble_blocks(d, blocks);
        for (int i = 0; i < br; ++i) {
            for (int j = 0; j < bc; ++j) CHECK(extract_block(d, whole, i, j) == blocks[i][j]);
        }
    }

    BinMatrix bad(2, 2);
    CHECK_THROWS_WITH_AS(assemble_blocks(BlockDims{{1}, {2}}, {{bad}}), doctest::Contains("block (1,1)"),
                         std::invalid_argument);
}

TEST_CASE("row_basis expresses every row over the pivot rows") {
    std::mt19937_64 rng(7006);
    for (int trial = 0; trial < 200; ++trial) {
        BinMatrix m = testutil::random_bin(rng, 1 + rng() % 6, 1 + rng() % 6);
        RowBasis rb = row_basis(m);
        CHECK(static_cast<int>(rb.pivot_rows.size()) == rank(m));
        for (int i = 0; i < m.rows(); ++i) {
            BitRow rebuilt(m.cols(), 0);
            for (std::size_t k = 0; k < rb.pivot_rows.size(); ++k) {
                if (!rb.combination[i][k]) continue;
                BitRow piv = m.row(rb.pivot_rows[k]);
                for (int c = 0; c < m.cols(); ++c) rebuilt[c] ^= piv[c];
            }
            CHECK(rebuilt == m.row(i));
        }
    }
}
