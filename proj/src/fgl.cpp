#include "cobord/fgl.hpp"

#include "cobord/errors.hpp"

namespace cobord::fgl {

const char* law_name(Law law)
{
    switch (law) {
        case Law::universal: return "universal";
        case Law::additive: return "additive";
        case Law::multiplicative: return "multiplicative";
        case Law::custom: return "custom";
    }
    return "custom";
}

RElem FglTable::b(int i, int j) const
{
    auto it = coeff.find({i, j});
    return it == coeff.end() ? RElem(ring) : it->second;
}

namespace {

void check_coeff_shape(const FglTable& f)
{
    for (auto& [ij, c] : f.coeff) {
        auto [i, j] = ij;
        if (i < 1 || j < 1 || i + j > f.order)
            fail(ErrorKind::shape_mismatch, "coefficient index outside the truncation order");
        if (!c.is_zero()) {
            std::optional<int> d = c.codegree();
            if (!d || *d != i + j - 1)
                fail(ErrorKind::degree_mismatch, "b_ij must be homogeneous of codegree i+j-1");
        }
        if (!(f.b(j, i) == c))
            fail(ErrorKind::shape_mismatch, "coefficient table is not symmetric");
    }
}

}  // namespace

FglTable universal_fgl(int order, const lazard::TableHandle& table)
{
    if (order < 1)
        fail(ErrorKind::flag_validation, "order must be >= 1");
    if (table->max_codegree() < order - 1)
        fail(ErrorKind::insufficient_table,
             "universal law at order " + std::to_string(order) + " needs table depth >= " +
                 std::to_string(order - 1) + ", have " + std::to_string(table->max_codegree()));
    FglTable f;
    f.law = Law::universal;
    f.name = "universal";
    f.ring = lazard::lazard_ring(table);
    f.order = order;
    for (int i = 1; i < order; ++i)
        for (int j = 1; i + j <= order; ++j)
            f.coeff[{i, j}] = lazard::normalize(table, lazard::apoly_gen(i, j));
    return f;
}

FglTable additive_fgl(int order)
{
    if (order < 1)
        fail(ErrorKind::flag_validation, "order must be >= 1");
    FglTable f;
    f.law = Law::additive;
    f.name = "additive";
    f.ring = integer_ring();
    f.order = order;
    return f;
}

FglTable multiplicative_fgl(int order)
{
    if (order < 1)
        fail(ErrorKind::flag_validation, "order must be >= 1");
    FglTable f;
    f.law = Law::multiplicative;
    f.name = "multiplicative";
    f.ring = laurent_ring();
    f.order = order;
    if (order >= 2) {
        RElem beta = RElem::basis(f.ring, 1, 0);
        f.coeff[{1, 1}] = -beta;
    }
    return f;
}

FglTable custom_fgl(std::string name, RingHandle ring, int order,
                    std::map<std::pair<int, int>, RElem> coeff)
{
    FglTable f;
    f.law = Law::custom;
    f.name = std::move(name);
    f.ring = std::move(ring);
    f.order = order;
    f.coeff = std::move(coeff);
    check_coeff_shape(f);
    return f;
}

gps::GradedSeries fgl_sum(const FglTable& f, const gps::GradedSeries& x,
                          const gps::GradedSeries& y)
{
    if (x.ring().get() != f.ring.get() || y.ring().get() != f.ring.get())
        fail(ErrorKind::mismatched_table, "series coefficients not over the law's ring");
    if (f.order < x.trunc())
        fail(ErrorKind::truncation_mismatch,
             "law of order " + std::to_string(f.order) + " applied at truncation " +
                 std::to_string(x.trunc()));
    if (!x.has_zero_constant_term() || !y.has_zero_constant_term())
        fail(ErrorKind::nonzero_constant_term, "formal sum needs zero constant terms");
    if (!x.is_homogeneous_of_degree(1) || !y.is_homogeneous_of_degree(1))
        fail(ErrorKind::degree_mismatch, "formal sum arguments must be first Chern classes");

    gps::GradedSeries r = x + y;
    const int trunc = x.trunc();
    std::vector<gps::GradedSeries> xp{x}, yp{y};
    while (int(xp.size()) < trunc)
        xp.push_back(xp.back() * x);
    while (int(yp.size()) < trunc)
        yp.push_back(yp.back() * y);
    for (int i = 1; i < trunc; ++i)
        for (int j = 1; i + j <= trunc; ++j) {
            RElem bij = f.b(i, j);
            if (bij.is_zero())
                continue;
            r = r + (xp[size_t(i - 1)] * yp[size_t(j - 1)]).scaled(bij);
        }
    // x + y with no higher terms at all still satisfies the additive law
    return r;
}

gps::GradedSeries uni_variable(const RingHandle& ring, int order)
{
    return gps::GradedSeries::variable(gps::single_var("u"), order, ring, 0);
}

bool is_composition_invertible(const gps::GradedSeries& s)
{
    if (s.vars()->count() != 1 || int(s.terms().size()) == 0)
        return false;
    std::vector<int> lin{1};
    return s.coefficient(lin).is_unit();
}

gps::GradedSeries formal_inverse(const FglTable& f, int order)
{
    if (order < 1)
        fail(ErrorKind::flag_validation, "order must be >= 1");
    if (f.order < order)
        fail(ErrorKind::truncation_mismatch, "law order too small for the requested inverse");
    gps::GradedSeries u = uni_variable(f.ring, order);
    gps::GradedSeries chi = -u;
    for (int step = 2; step <= order; ++step) {
        gps::GradedSeries err = fgl_sum(f, u, chi);
        if (err.is_zero())
            break;
        chi = chi - err;
    }
    if (!fgl_sum(f, u, chi).is_zero())
        fail(ErrorKind::internal, "formal inverse iteration did not converge");
    return chi;
}

gps::GradedSeries n_series(const FglTable& f, const Int& n, int order)
{
    if (order < 1)
        fail(ErrorKind::flag_validation, "order must be >= 1");
    if (f.order < order)
        fail(ErrorKind::truncation_mismatch, "law order too small for the requested n-series");
    gps::GradedSeries step =
        n >= 0 ? uni_variable(f.ring, order) : formal_inverse(f, order);
    gps::GradedSeries acc = gps::GradedSeries::zero(step.vars(), order, f.ring);
    Int count = abs(n);
    for (Int k = 0; k < count; ++k)
        acc = acc.is_zero() ? step : fgl_sum(f, acc, step);
    return acc;
}

bool check_axioms(const FglTable& f, int order)
{
    auto vars = std::make_shared<gps::VarSet>(
        std::vector<gps::Var>{{"u", 1}, {"v", 1}, {"w", 1}});
    gps::GradedSeries u = gps::GradedSeries::variable(vars, order, f.ring, 0);
    gps::GradedSeries v = gps::GradedSeries::variable(vars, order, f.ring, 1);
    gps::GradedSeries w = gps::GradedSeries::variable(vars, order, f.ring, 2);
    gps::GradedSeries zero = gps::GradedSeries::zero(vars, order, f.ring);
    if (!(fgl_sum(f, u, zero) == u))
        return false;
    if (!(fgl_sum(f, u, v) == fgl_sum(f, v, u)))
        return false;
    return fgl_sum(f, fgl_sum(f, u, v), w) == fgl_sum(f, u, fgl_sum(f, v, w));
}

std::string fgl_str(const FglTable& f)
{
    auto vars =
        std::make_shared<gps::VarSet>(std::vector<gps::Var>{{"u", 1}, {"v", 1}});
    gps::GradedSeries u = gps::GradedSeries::variable(vars, f.order, f.ring, 0);
    gps::GradedSeries v = gps::GradedSeries::variable(vars, f.order, f.ring, 1);
    return fgl_sum(f, u, v).str();
}

}  // namespace cobord::fgl
