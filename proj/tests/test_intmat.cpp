#include <doctest.h>

#include "cobord/intmat.hpp"
#include "cobord/numeric.hpp"

using namespace cobord;

namespace {

IMat from_rows(const std::vector<std::vector<long>>& rows, int cols)
{
    IMat m(int(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c)
            m.at(int(r), c) = rows[r][size_t(c)];
    return m;
}

IMat random_mat(SplitMix& rng, int rows, int cols, long mag)
{
    IMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = rng.signed_small(mag);
    return m;
}

}  // namespace

TEST_CASE("hnf of a staircase example")
{
    IMat m = from_rows({{0, 1, -1}, {0, -2, 2}}, 3);
    std::vector<int> pivots = hnf_rows(m);
    REQUIRE(pivots == std::vector<int>{1});
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == -1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 0);
    CHECK(m.at(1, 2) == 0);
}

TEST_CASE("hnf is a lattice invariant")
{
    SplitMix rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        IMat a = random_mat(rng, 5, 4, 6);
        // shuffle rows and add a row multiple: the row lattice is unchanged
        IMat b = a;
        std::vector<Int> extra(4);
        for (int c = 0; c < 4; ++c)
            extra[size_t(c)] = a.at(0, c) * 3 - a.at(2, c);
        IMat bx(6, 4);
        for (int r = 0; r < 5; ++r)
            bx.set_row(r, b.row(4 - r));
        bx.set_row(5, extra);
        CHECK(lattice_hnf(a) == lattice_hnf(bx));
    }
}

TEST_CASE("hnf reduction is canonical and integer-linear on cosets")
{
    IMat h = from_rows({{2, 3, 0}}, 3);
    std::vector<int> pivots = hnf_rows(h);
    REQUIRE(pivots.size() == 1);
    std::vector<Int> v{5, 7, 1};
    hnf_reduce(h, pivots, v);
    // reduced representative has first coordinate in [0, 2)
    CHECK(v[0] >= 0);
    CHECK(v[0] < 2);
    std::vector<Int> again = v;
    hnf_reduce(h, pivots, again);
    CHECK(again == v);
}

TEST_CASE("diagonalize recovers rank and a usable quotient transform")
{
    // single relation (2,3): Z^2 / <(2,3)> is free of rank 1
    IMat m = from_rows({{2, 3}}, 2);
    Diagonalization d = diagonalize(m);
    REQUIRE(d.rank == 1);
    CHECK(d.divisors == std::vector<Int>{1});
    CHECK(mat_mul(d.v, d.w) == IMat::identity(2));
    // the projection w -> (w*V) tail kills the lattice
    std::vector<Int> rel{2, 3};
    std::vector<Int> y = row_times_mat(rel, d.v);
    CHECK(y[1] == 0);
}

TEST_CASE("diagonalize transforms stay inverse on random input")
{
    SplitMix rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        int rows = 2 + int(rng.below(5));
        int cols = 2 + int(rng.below(5));
        IMat a = random_mat(rng, rows, cols, 8);
        IMat keep = a;
        Diagonalization d = diagonalize(std::move(a));
        CHECK(mat_mul(d.v, d.w) == IMat::identity(cols));
        CHECK(d.rank == rank_of(keep));
        // every original row lands in the diagonal lattice after V
        for (int r = 0; r < rows; ++r) {
            std::vector<Int> y = row_times_mat(keep.row(r), d.v);
            for (int c = d.rank; c < cols; ++c)
                CHECK(y[size_t(c)] == 0);
            for (int c = 0; c < d.rank; ++c)
                CHECK(y[size_t(c)] % d.divisors[size_t(c)] == 0);
        }
    }
}

TEST_CASE("kernel basis is saturated and annihilates")
{
    IMat m = from_rows({{1, 1, 1}, {0, 2, 2}}, 3);
    IMat k = kernel_basis(m);
    REQUIRE(k.rows == 1);
    for (int r = 0; r < k.rows; ++r) {
        std::vector<Int> prod = row_times_mat(k.row(r), transpose(m));
        CHECK(is_zero_vec(prod));
    }
    // (0,1,-1) generates the kernel
    IMat expect = from_rows({{0, 1, -1}}, 3);
    CHECK(lattice_equal(k, expect));
}

TEST_CASE("lattice containment")
{
    IMat big = from_rows({{1, 0}, {0, 1}}, 2);
    IMat small = from_rows({{2, 0}, {0, 3}}, 2);
    CHECK(lattice_subset(small, big));
    CHECK(!lattice_subset(big, small));
    CHECK(!lattice_equal(small, big));
}

TEST_CASE("rank over Q")
{
    CHECK(rank_of(from_rows({{1, 2}, {2, 4}}, 2)) == 1);
    CHECK(rank_of(from_rows({{1, 2}, {2, 5}}, 2)) == 2);
    CHECK(rank_of(IMat(0, 3)) == 0);
}
