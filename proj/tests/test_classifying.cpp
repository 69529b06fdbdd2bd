#include <doctest.h>

#include "cobord/classifying.hpp"
#include "cobord/errors.hpp"

using namespace cobord;
using namespace cobord::classifying;
using cobord::lazard::Table;
using cobord::lazard::TableHandle;

namespace {

long partitions(int d)
{
    if (d < 0)
        return 0;
    std::vector<long> p(size_t(d) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= d; ++part)
        for (int s = part; s <= d; ++s)
            p[size_t(s)] += p[size_t(s - part)];
    return p[size_t(d)];
}

}  // namespace

TEST_CASE("BT_1 graded ranks: frozen examples")
{
    TableHandle table = Table::build(5);
    SUBCASE("D=2, degree 0 has rank 4")
    {
        TorusRing bt = ring_BT(1, 2, table);
        CHECK(bt.pres.rank(0) == 4);
    }
    SUBCASE("D=0, degree 0 has rank 1")
    {
        TorusRing bt = ring_BT(1, 0, table);
        CHECK(bt.pres.rank(0) == 1);
        CHECK(bt.pres.graded_basis(0).size() == 1);
    }
    SUBCASE("degree 1 contains the generator with unit coefficient at p=1")
    {
        TorusRing bt = ring_BT(1, 3, table);
        auto basis = bt.pres.graded_basis(1);
        bool found = false;
        for (const BasisElement& b : basis)
            if (b.mono == std::vector<int>{1} && b.codegree == 0 && b.index == 0)
                found = true;
        CHECK(found);
    }
    SUBCASE("product formula across degrees and truncations")
    {
        // deep enough that no coefficient codegree in the window truncates
        TableHandle deep = Table::build(7);
        for (int trunc = 0; trunc <= 4; ++trunc) {
            TorusRing bt = ring_BT(1, trunc, deep);
            for (int i = -2; i <= 2; ++i) {
                long expect = 0;
                for (int p = 0; p <= trunc; ++p)
                    expect += partitions(p - i);
                CHECK(bt.pres.rank(i) == expect);
            }
        }
    }
}

TEST_CASE("ring_BT requires a deep enough table")
{
    TableHandle table = Table::build(2);
    CHECK_THROWS_AS((void)ring_BT(1, 3, table), Error);
}

TEST_CASE("pro-system mirror: ranks nest under truncation")
{
    TableHandle table = Table::build(5);
    TorusRing big = ring_BT(2, 5, table);
    TorusRing small = ring_BT(2, 3, table);
    for (int i = -2; i <= 2; ++i) {
        CHECK(small.pres.rank(i) <= big.pres.rank(i));
        // the small basis is a prefix of the big one in the graded order
        auto bs = small.pres.graded_basis(i);
        auto bb = big.pres.graded_basis(i);
        REQUIRE(bs.size() <= bb.size());
    }
}

TEST_CASE("BGL_1 coincides with BT_1")
{
    TableHandle table = Table::build(4);
    GlRing gl = ring_BGL(1, 4, table);
    TorusRing bt = ring_BT(1, 4, table);
    for (int i = -3; i <= 3; ++i)
        CHECK(gl.pres.rank(i) == bt.pres.rank(i));
    // restriction sends gamma_1 to t_1
    gps::GradedSeries g1 = gps::GradedSeries::variable(gl.pres.vars, 4, gl.pres.ring, 0);
    CHECK(gl.restrict_to_torus(g1) == bt.chern_root(0));
}

TEST_CASE("BGL_2 restriction: frozen expansion of gamma_1*gamma_2")
{
    TableHandle table = Table::build(3);
    GlRing gl = ring_BGL(2, 3, table);
    gps::GradedSeries g1 = gps::GradedSeries::variable(gl.pres.vars, 3, gl.pres.ring, 0);
    gps::GradedSeries g2 = gps::GradedSeries::variable(gl.pres.vars, 3, gl.pres.ring, 1);
    CHECK(gl.restrict_to_torus(g1 * g2).str() == "t1^2*t2 + t1*t2^2");
}

TEST_CASE("restriction is injective on truncated graded pieces")
{
    TableHandle table = Table::build(4);
    GlRing gl = ring_BGL(2, 4, table);
    // distinct gamma monomials of the same degree stay independent
    gps::GradedSeries g1 = gps::GradedSeries::variable(gl.pres.vars, 4, gl.pres.ring, 0);
    gps::GradedSeries g2 = gps::GradedSeries::variable(gl.pres.vars, 4, gl.pres.ring, 1);
    gps::GradedSeries x = gl.restrict_to_torus(g1 * g1 - g2);
    CHECK(!x.is_zero());
    CHECK(!gl.restrict_to_torus(g1 * g2).is_zero());
}

TEST_CASE("chern_of_character: frozen examples")
{
    TableHandle table = Table::build(4);
    TorusRing bt = ring_BT(2, 2, table);
    fgl::FglTable f = fgl::universal_fgl(2, table);

    SUBCASE("basis character")
    {
        std::vector<Int> chi{1, 0};
        CHECK(chern_of_character(chi, f, bt) == bt.chern_root(0));
    }
    SUBCASE("inverse character")
    {
        std::vector<Int> chi{-1, 0};
        gps::GradedSeries got = chern_of_character(chi, f, bt);
        RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
        gps::GradedSeries t1 = bt.chern_root(0);
        CHECK(got == -t1 + (t1 * t1).scaled(a11));
    }
    SUBCASE("sum of the basis characters")
    {
        std::vector<Int> chi{1, 1};
        gps::GradedSeries got = chern_of_character(chi, f, bt);
        RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
        gps::GradedSeries t1 = bt.chern_root(0), t2 = bt.chern_root(1);
        CHECK(got == t1 + t2 + (t1 * t2).scaled(a11));
    }
    SUBCASE("monoid map into the formal group")
    {
        TorusRing bt3 = ring_BT(2, 3, table);
        fgl::FglTable f3 = fgl::universal_fgl(3, table);
        SplitMix rng(5);
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<Int> a{rng.signed_small(2), rng.signed_small(2)};
            std::vector<Int> b{rng.signed_small(2), rng.signed_small(2)};
            std::vector<Int> ab{a[0] + b[0], a[1] + b[1]};
            gps::GradedSeries ca = chern_of_character(a, f3, bt3);
            gps::GradedSeries cb = chern_of_character(b, f3, bt3);
            gps::GradedSeries rhs = ca.is_zero()   ? cb
                                    : cb.is_zero() ? ca
                                                   : fgl::fgl_sum(f3, ca, cb);
            CHECK(chern_of_character(ab, f3, bt3) == rhs);
        }
    }
}

TEST_CASE("character maps compose and pull back")
{
    TableHandle table = Table::build(3);
    TorusRing src = ring_BT(1, 3, table);
    fgl::FglTable f = fgl::universal_fgl(3, table);

    // diagonal embedding G_m -> T^2: both basis characters restrict to chi
    IMat diag(2, 1);
    diag.at(0, 0) = 1;
    diag.at(1, 0) = 1;
    CharacterMap m = character_map(1, 2, diag);

    TorusRing dst = ring_BT(2, 3, table);
    gps::GradedSeries t1_plus_t2 =
        fgl::fgl_sum(f, dst.chern_root(0), dst.chern_root(1));
    gps::GradedSeries pulled = torus_pullback(m, f, src, t1_plus_t2);
    gps::GradedSeries doubling = fgl::n_series(f, 2, 3).substitute({src.chern_root(0)});
    CHECK(pulled == doubling);

    // composition is matrix product
    IMat neg(1, 1);
    neg.at(0, 0) = -1;
    CharacterMap inv = character_map(1, 1, neg);
    CharacterMap both = compose(m, inv);
    CHECK(both.mat.at(0, 0) == -1);
    CHECK(both.mat.at(1, 0) == -1);
}

TEST_CASE("weyl invariants: trivial group and the swap")
{
    TableHandle table = Table::build(3);
    TorusRing bt = ring_BT(2, 3, table);

    SUBCASE("trivial group keeps the whole slice")
    {
        auto slices = weyl_invariants(bt, {}, 2, 0, 1);
        for (const auto& s : slices) {
            long monos = long(gps::monomials_of_weighted_degree({1, 1}, s.t_degree).size());
            CHECK(s.monomial_basis.rows == monos);
        }
    }
    SUBCASE("S_2 fixes the symmetric line in t-degree 1")
    {
        IMat inv = invariant_monomials(2, 1, symmetric_group_gens(2));
        REQUIRE(inv.rows == 1);
        CHECK(inv.at(0, 0) == inv.at(0, 1));
        CHECK(abs(inv.at(0, 0)) == 1);
    }
    SUBCASE("slice ranks carry the coefficient factor")
    {
        auto slices = weyl_invariants(bt, symmetric_group_gens(2), 2, 0, 2);
        for (const auto& s : slices) {
            CHECK(s.coeff_rank == table->rank(s.codegree));
            CHECK(s.rank() == s.monomial_basis.rows * s.coeff_rank);
        }
    }
}

TEST_CASE("invariants equal the BGL image, integrally, for small cases")
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& cmp : compare_invariants_with_gl(n, 4)) {
            CHECK(cmp.rational_equal);
            CHECK(cmp.image_contained);
            CHECK(cmp.integral_equal);
        }
}

TEST_CASE("BSL rings: frozen relation, elimination, ranks")
{
    TableHandle table = Table::build(5);

    SUBCASE("SL_1 is the coefficient ring")
    {
        SlRing sl = ring_BSL(1, 3, table);
        CHECK(sl.pres.vars->count() == 0);
        for (int i = -3; i <= 0; ++i)
            CHECK(sl.pres.rank(i) == partitions(-i));
        CHECK(sl.pres.rank(1) == 0);
        CHECK(sl.gamma1_image.is_zero());
    }

    SUBCASE("SL_2 determinant relation at D=3")
    {
        SlRing sl = ring_BSL(2, 3, table);
        RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
        RElem a12 = lazard::normalize(table, lazard::apoly_gen(1, 2));
        gps::VarsHandle gv = sl.det_relation.vars();
        gps::GradedSeries g1 = gps::GradedSeries::variable(gv, 3, sl.pres.ring, 0);
        gps::GradedSeries g2 = gps::GradedSeries::variable(gv, 3, sl.pres.ring, 1);
        gps::GradedSeries want = g1 + g2.scaled(a11) + (g1 * g2).scaled(a12);
        CHECK(sl.det_relation == want);
    }

    SUBCASE("SL_2 ranks match the one-generator power series ring")
    {
        TableHandle deep = Table::build(7);
        SlRing sl = ring_BSL(2, 5, deep);
        for (int i = -3; i <= 5; ++i) {
            // monomials gamma_2^k of degree 2k with coefficients at codegree 2k-i
            long direct = 0;
            for (int k = 0; 2 * k <= 5; ++k)
                direct += partitions(2 * k - i);
            CHECK(sl.pres.rank(i) == direct);
        }
    }

    SUBCASE("SL_3 relation back-substitutes to zero")
    {
        SlRing sl = ring_BSL(3, 4, table);
        gps::VarsHandle full = sl.det_relation.vars();
        std::vector<gps::GradedSeries> images;
        for (int k = 0; k < full->count(); ++k)
            images.push_back(
                gps::GradedSeries::variable(full, 4, sl.pres.ring, k));
        gps::GradedSeries embedded = gps::GradedSeries::zero(full, 4, sl.pres.ring);
        for (auto& [mono, coeff] : sl.gamma1_image.terms()) {
            std::vector<int> wide(size_t(full->count()), 0);
            for (size_t k = 0; k < mono.size(); ++k)
                wide[k + 1] = mono[k];
            embedded.add_term(wide, coeff);
        }
        images[0] = embedded;
        CHECK(sl.det_relation.substitute(images).is_zero());
    }
}

TEST_CASE("presentation equality for round trips")
{
    TableHandle table = Table::build(3);
    TorusRing a = ring_BT(2, 3, table);
    TorusRing b = ring_BT(2, 3, table);
    CHECK(a.pres == b.pres);
    TorusRing c = ring_BT(2, 2, table);
    CHECK(!(a.pres == c.pres));
}
