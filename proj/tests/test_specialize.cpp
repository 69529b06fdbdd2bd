#include <doctest.h>

#include "cobord/classifying.hpp"
#include "cobord/errors.hpp"
#include "cobord/specialize.hpp"

using namespace cobord;
using namespace cobord::specialize;
using cobord::lazard::Table;
using cobord::lazard::TableHandle;

TEST_CASE("additive specialization sends every generator to zero")
{
    TableHandle table = Table::build(4);
    SpecializationMap chow = chow_specialization(table);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; i + j <= 4; ++j)
            CHECK(chow.generator_image(i, j).is_zero());
    RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
    CHECK(chow.apply(a11).is_zero());
    CHECK(chow.apply(RElem::unit(lazard::lazard_ring(table))) ==
          RElem::unit(integer_ring()));
}

TEST_CASE("multiplicative specialization: a11 to -b, the rest to zero")
{
    TableHandle table = Table::build(4);
    SpecializationMap kth = ktheory_specialization(table);
    CHECK(kth.generator_image(1, 1) == -RElem::basis(laurent_ring(), 1, 0));
    CHECK(kth.generator_image(1, 2).is_zero());
    CHECK(kth.generator_image(2, 2).is_zero());

    RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
    CHECK(kth.apply(a11) == -RElem::basis(laurent_ring(), 1, 0));
    // a11^2 maps to b^2
    CHECK(kth.apply(lazard::lazard_mul(a11, a11)) == RElem::basis(laurent_ring(), 2, 0));
}

TEST_CASE("a broken target table is rejected")
{
    TableHandle table = Table::build(3);
    // symmetric, correctly graded, but not associative: b22 = b^3 alone
    std::map<std::pair<int, int>, RElem> coeff;
    coeff[{2, 2}] = RElem::basis(laurent_ring(), 3, 0);
    fgl::FglTable broken = fgl::custom_fgl("broken", laurent_ring(), 4, std::move(coeff));
    CHECK_THROWS_AS((void)SpecializationMap(broken, table), Error);
    try {
        (void)SpecializationMap(broken, table);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::relation_not_killed);
    }
}

TEST_CASE("specializing the universal law recovers the target law")
{
    TableHandle table = Table::build(4);
    fgl::FglTable univ = fgl::universal_fgl(5, table);
    for (const SpecializationMap& s :
         {chow_specialization(table), ktheory_specialization(table)}) {
        fgl::FglTable mapped = s.apply(univ);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; i + j <= 5; ++j)
                CHECK(mapped.b(i, j) == s.target().b(i, j));
    }
}

TEST_CASE("additive base change of BT_n is the polynomial ring")
{
    TableHandle table = Table::build(5);
    SpecializationMap chow = chow_specialization(table);
    for (int n = 1; n <= 3; ++n) {
        classifying::TorusRing bt = classifying::ring_BT(n, 5, table);
        classifying::RingPresentation chow_pres = chow.apply(bt.pres);
        std::vector<int> ones(size_t(n), 1);
        for (int i = -2; i <= 5; ++i) {
            Int expect = (i >= 0 && i <= 5) ? gps::monomial_count(ones, i) : Int(0);
            CHECK(Int(chow_pres.rank(i)) == expect);
        }
    }
}

TEST_CASE("additive base change of BGL_2 in degree 2 has rank 2")
{
    TableHandle table = Table::build(4);
    SpecializationMap chow = chow_specialization(table);
    classifying::GlRing gl = classifying::ring_BGL(2, 4, table);
    classifying::RingPresentation p = chow.apply(gl.pres);
    CHECK(p.rank(2) == 2);  // gamma_1^2 and gamma_2
    CHECK(p.rank(1) == 1);
    CHECK(p.rank(0) == 1);
    CHECK(p.rank(-1) == 0);
}

TEST_CASE("multiplicative specialization of the doubling series")
{
    TableHandle table = Table::build(3);
    SpecializationMap kth = ktheory_specialization(table);
    fgl::FglTable univ = fgl::universal_fgl(3, table);
    gps::GradedSeries two = fgl::n_series(univ, 2, 2);
    gps::GradedSeries got = kth.apply(two.truncate(2));
    gps::GradedSeries want =
        gps::GradedSeries::zero(gps::single_var("u"), 2, laurent_ring());
    want.add_term({1}, RElem::integer(laurent_ring(), 2));
    want.add_term({2}, -RElem::basis(laurent_ring(), 1, 0));
    CHECK(got == want);
}

TEST_CASE("additive specialization of a character class is the linear form")
{
    TableHandle table = Table::build(4);
    SpecializationMap chow = chow_specialization(table);
    classifying::TorusRing bt = classifying::ring_BT(3, 4, table);
    fgl::FglTable univ = fgl::universal_fgl(4, table);
    std::vector<Int> chi{3, -2, 1};
    gps::GradedSeries linear = chow.apply(classifying::chern_of_character(chi, univ, bt));
    gps::GradedSeries want =
        gps::GradedSeries::zero(bt.pres.vars, 4, integer_ring());
    want.add_term({1, 0, 0}, RElem::integer(integer_ring(), 3));
    want.add_term({0, 1, 0}, RElem::integer(integer_ring(), -2));
    want.add_term({0, 0, 1}, RElem::integer(integer_ring(), 1));
    CHECK(linear == want);
}

TEST_CASE("base change of the SL_2 determinant relation is gamma_1")
{
    TableHandle table = Table::build(4);
    SpecializationMap chow = chow_specialization(table);
    classifying::SlRing sl = classifying::ring_BSL(2, 4, table);
    gps::GradedSeries image = chow.apply(sl.det_relation);
    gps::GradedSeries want =
        gps::GradedSeries::variable(sl.det_relation.vars(), 4, integer_ring(), 0);
    CHECK(image == want);
    // and the quotient has the ranks of Z[gamma_2]
    classifying::RingPresentation p = chow.apply(sl.pres);
    for (int i = 0; i <= 4; ++i)
        CHECK(p.rank(i) == (i % 2 == 0 ? 1 : 0));
}

TEST_CASE("specialization commutes with truncation, products, and elimination")
{
    TableHandle table = Table::build(4);
    SpecializationMap chow = chow_specialization(table);
    SpecializationMap kth = ktheory_specialization(table);
    RingHandle lring = lazard::lazard_ring(table);
    RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
    RElem a12 = lazard::normalize(table, lazard::apoly_gen(1, 2));

    gps::VarsHandle tv = gps::torus_vars(2);
    gps::GradedSeries t1 = gps::GradedSeries::variable(tv, 4, lring, 0);
    gps::GradedSeries t2 = gps::GradedSeries::variable(tv, 4, lring, 1);
    gps::GradedSeries x = t1 + (t1 * t2).scaled(a11);
    gps::GradedSeries y = t2 + (t1 * t1).scaled(a11);

    for (const SpecializationMap* s : {&chow, &kth}) {
        for (int cut = 0; cut <= 4; ++cut)
            CHECK(s->apply(x.truncate(cut)) == s->apply(x).truncate(cut));
        CHECK(s->apply(x * y) == s->apply(x) * s->apply(y));
        CHECK(s->apply(x + y) == s->apply(x) + s->apply(y));
    }

    // eliminate-then-specialize equals specialize-then-eliminate
    gps::VarsHandle gv = gps::gamma_vars(2);
    gps::GradedSeries g1 = gps::GradedSeries::variable(gv, 4, lring, 0);
    gps::GradedSeries g2 = gps::GradedSeries::variable(gv, 4, lring, 1);
    gps::GradedSeries rel = g1 + g2.scaled(a11) + (g1 * g2).scaled(a12);
    gps::GradedSeries sigma_then = chow.apply(gps::eliminate(rel, 0));
    gps::GradedSeries then_sigma = gps::eliminate(chow.apply(rel), 0);
    CHECK(sigma_then == then_sigma);
}

TEST_CASE("mismatched table is rejected")
{
    TableHandle t1 = Table::build(3);
    TableHandle t2 = Table::build(3);
    SpecializationMap chow = chow_specialization(t1);
    RElem foreign = lazard::normalize(t2, lazard::apoly_gen(1, 1));
    CHECK_THROWS_AS((void)chow.apply(foreign), Error);
}
