#include <doctest.h>

#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/lazard.hpp"

using namespace cobord;
using namespace cobord::fgl;
using cobord::lazard::Table;
using cobord::lazard::TableHandle;

namespace {

gps::GradedSeries two_vars(const FglTable& f, int which)
{
    auto vars = std::make_shared<gps::VarSet>(std::vector<gps::Var>{{"u", 1}, {"v", 1}});
    return gps::GradedSeries::variable(vars, f.order, f.ring, which);
}

}  // namespace

TEST_CASE("universal law display at low order")
{
    TableHandle table = Table::build(2);
    CHECK(fgl_str(universal_fgl(1, table)) == "u + v");
    CHECK(fgl_str(universal_fgl(2, table)) == "u + v + a11*u*v");
    FglTable f3 = universal_fgl(3, table);
    // order 3: coefficients of u^2 v and u v^2 agree and equal the class of a12
    RElem c21 = f3.b(2, 1);
    RElem c12 = f3.b(1, 2);
    CHECK(c21 == c12);
    CHECK(c12 == lazard::normalize(table, lazard::apoly_gen(1, 2)));
}

TEST_CASE("universal law needs a deep enough table")
{
    TableHandle shallow = Table::build(1);
    CHECK_THROWS_AS((void)universal_fgl(3, shallow), Error);
    try {
        (void)universal_fgl(3, shallow);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::insufficient_table);
    }
}

TEST_CASE("fgl_sum: additive law is plain addition")
{
    FglTable f = additive_fgl(4);
    gps::GradedSeries u = two_vars(f, 0), v = two_vars(f, 1);
    CHECK(fgl_sum(f, u, v) == u + v);
}

TEST_CASE("fgl_sum: universal law at order 2 on two roots")
{
    TableHandle table = Table::build(2);
    FglTable f = universal_fgl(2, table);
    gps::GradedSeries u = two_vars(f, 0), v = two_vars(f, 1);
    gps::GradedSeries sum = fgl_sum(f, u, v);
    CHECK(sum.str() == "u + v + a11*u*v");
    CHECK(sum == fgl_sum(f, v, u));
    gps::GradedSeries zero = gps::GradedSeries::zero(u.vars(), f.order, f.ring);
    CHECK(fgl_sum(f, u, zero) == u);
}

TEST_CASE("fgl axioms for the three stock laws")
{
    TableHandle table = Table::build(4);
    CHECK(check_axioms(universal_fgl(5, table), 5));
    CHECK(check_axioms(additive_fgl(5), 5));
    CHECK(check_axioms(multiplicative_fgl(5), 5));
}

TEST_CASE("formal inverse: frozen examples")
{
    TableHandle table = Table::build(3);
    SUBCASE("leading term")
    {
        FglTable f = universal_fgl(1, table);
        gps::GradedSeries chi = formal_inverse(f, 1);
        CHECK(chi.str() == "-u");
    }
    SUBCASE("universal at order 2: -u + a11*u^2")
    {
        FglTable f = universal_fgl(2, table);
        gps::GradedSeries chi = formal_inverse(f, 2);
        gps::GradedSeries u = uni_variable(f.ring, 2);
        RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
        gps::GradedSeries want = -u + (u * u).scaled(a11);
        CHECK(chi == want);
    }
    SUBCASE("multiplicative at order 3: geometric series")
    {
        FglTable f = multiplicative_fgl(3);
        gps::GradedSeries chi = formal_inverse(f, 3);
        gps::GradedSeries want = gps::GradedSeries::zero(gps::single_var("u"), 3, f.ring);
        want.add_term({1}, RElem::integer(f.ring, -1));
        want.add_term({2}, -RElem::basis(f.ring, 1, 0));
        want.add_term({3}, -RElem::basis(f.ring, 2, 0));
        CHECK(chi == want);
    }
    SUBCASE("involution up to truncation")
    {
        FglTable f = universal_fgl(4, Table::build(4));
        gps::GradedSeries chi = formal_inverse(f, 4);
        CHECK(is_composition_invertible(chi));
        gps::GradedSeries chichi = chi.substitute({chi});
        CHECK(chichi == uni_variable(f.ring, 4));
    }
}

TEST_CASE("n-series: frozen examples and the homomorphism law")
{
    TableHandle table = Table::build(3);
    SUBCASE("zero and one")
    {
        FglTable f = universal_fgl(3, table);
        CHECK(n_series(f, 0, 3).is_zero());
        CHECK(n_series(f, 1, 3) == uni_variable(f.ring, 3));
    }
    SUBCASE("universal doubling: 2u + a11 u^2 + 2 a12 u^3")
    {
        FglTable f = universal_fgl(3, table);
        gps::GradedSeries got = n_series(f, 2, 3);
        RElem a11 = lazard::normalize(table, lazard::apoly_gen(1, 1));
        RElem a12 = lazard::normalize(table, lazard::apoly_gen(1, 2));
        gps::GradedSeries want = gps::GradedSeries::zero(gps::single_var("u"), 3, f.ring);
        want.add_term({1}, RElem::integer(f.ring, 2));
        want.add_term({2}, a11);
        want.add_term({3}, a12.scaled(2));
        CHECK(got == want);
    }
    SUBCASE("multiplicative tripling: 3u - 3b u^2 + b^2 u^3")
    {
        FglTable f = multiplicative_fgl(3);
        gps::GradedSeries got = n_series(f, 3, 3);
        gps::GradedSeries want = gps::GradedSeries::zero(gps::single_var("u"), 3, f.ring);
        want.add_term({1}, RElem::integer(f.ring, 3));
        want.add_term({2}, RElem::basis(f.ring, 1, 0).scaled(-3));
        want.add_term({3}, RElem::basis(f.ring, 2, 0));
        CHECK(got == want);
    }
    SUBCASE("negative n through the inverse")
    {
        FglTable f = universal_fgl(4, Table::build(4));
        CHECK(n_series(f, -1, 4) == formal_inverse(f, 4));
        gps::GradedSeries u = uni_variable(f.ring, 4);
        CHECK(fgl_sum(f, u, n_series(f, -1, 4)).is_zero());
    }
    SUBCASE("additivity in n")
    {
        FglTable f = universal_fgl(4, Table::build(4));
        for (int m = -2; m <= 2; ++m)
            for (int n = -2; n <= 2; ++n) {
                gps::GradedSeries sm = n_series(f, m, 4);
                gps::GradedSeries sn = n_series(f, n, 4);
                gps::GradedSeries rhs = sm.is_zero()   ? sn
                                        : sn.is_zero() ? sm
                                                       : fgl_sum(f, sm, sn);
                CHECK(n_series(f, Int(m) + Int(n), 4) == rhs);
            }
    }
}

TEST_CASE("custom tables are checked structurally")
{
    RingHandle ring = laurent_ring();
    std::map<std::pair<int, int>, RElem> bad;
    bad[{1, 1}] = RElem::basis(ring, 2, 0);  // wrong codegree
    CHECK_THROWS_AS((void)custom_fgl("broken", ring, 3, bad), Error);

    std::map<std::pair<int, int>, RElem> asym;
    asym[{1, 2}] = RElem::basis(ring, 2, 0);
    CHECK_THROWS_AS((void)custom_fgl("asym", ring, 3, asym), Error);

    std::map<std::pair<int, int>, RElem> ok;
    ok[{1, 1}] = -RElem::basis(ring, 1, 0);
    FglTable f = custom_fgl("mult-by-hand", ring, 3, ok);
    CHECK(check_axioms(f, 3));
}

TEST_CASE("truncation mismatch is refused")
{
    FglTable f = additive_fgl(2);
    auto vars = std::make_shared<gps::VarSet>(std::vector<gps::Var>{{"u", 1}, {"v", 1}});
    gps::GradedSeries u = gps::GradedSeries::variable(vars, 4, f.ring, 0);
    gps::GradedSeries v = gps::GradedSeries::variable(vars, 4, f.ring, 1);
    CHECK_THROWS_AS((void)fgl_sum(f, u, v), Error);
}
