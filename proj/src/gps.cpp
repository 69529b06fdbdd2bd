#include "cobord/gps.hpp"

#include <algorithm>
#include <sstream>

#include "cobord/errors.hpp"

namespace cobord::gps {

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars))
{
    for (const Var& v : vars_)
        if (v.degree < 1)
            fail(ErrorKind::degree_mismatch, "generator degree must be >= 1");
}

int VarSet::weighted_degree(const std::vector<int>& expo) const
{
    int d = 0;
    for (size_t k = 0; k < vars_.size(); ++k)
        d += vars_[k].degree * expo[k];
    return d;
}

VarsHandle torus_vars(int n)
{
    std::vector<Var> vs;
    for (int k = 1; k <= n; ++k)
        vs.push_back(Var{"t" + std::to_string(k), 1});
    return std::make_shared<VarSet>(std::move(vs));
}

VarsHandle gamma_vars(int n, int from)
{
    std::vector<Var> vs;
    for (int k = from; k <= n; ++k)
        vs.push_back(Var{"g" + std::to_string(k), k});
    return std::make_shared<VarSet>(std::move(vs));
}

VarsHandle single_var(const std::string& name)
{
    return std::make_shared<VarSet>(std::vector<Var>{Var{name, 1}});
}

bool MonoLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const
{
    int da = 0, db = 0;
    for (size_t k = 0; k < degrees.size(); ++k) {
        da += degrees[k] * a[k];
        db += degrees[k] * b[k];
    }
    if (da != db)
        return da < db;
    return a > b;  // within a degree: lex-descending, t1 powers first
}

GradedSeries::GradedSeries(VarsHandle vars, int trunc, RingHandle ring)
    : vars_(std::move(vars)),
      trunc_(trunc),
      ring_(std::move(ring)),
      terms_(MonoLess{[&] {
          std::vector<int> ds;
          for (const Var& v : vars_->vars())
              ds.push_back(v.degree);
          return ds;
      }()})
{
}

GradedSeries GradedSeries::zero(const VarsHandle& vars, int trunc, const RingHandle& ring)
{
    return GradedSeries(vars, trunc, ring);
}

GradedSeries GradedSeries::constant(const VarsHandle& vars, int trunc, const RElem& value)
{
    GradedSeries s(vars, trunc, value.ring());
    s.add_term(std::vector<int>(size_t(vars->count()), 0), value);
    return s;
}

GradedSeries GradedSeries::variable(const VarsHandle& vars, int trunc, const RingHandle& ring,
                                    int k)
{
    GradedSeries s(vars, trunc, ring);
    std::vector<int> mono(size_t(vars->count()), 0);
    mono.at(size_t(k)) = 1;
    s.add_term(mono, RElem::unit(ring));
    return s;
}

bool GradedSeries::has_zero_constant_term() const
{
    std::vector<int> zero(size_t(vars_->count()), 0);
    return terms_.find(zero) == terms_.end();
}

RElem GradedSeries::coefficient(const std::vector<int>& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? RElem(ring_) : it->second;
}

void GradedSeries::add_term(const std::vector<int>& mono, const RElem& coeff)
{
    if (int(mono.size()) != vars_->count())
        fail(ErrorKind::shape_mismatch, "monomial length");
    if (coeff.truncated())
        truncated_ = true;
    if (coeff.is_zero())
        return;
    if (vars_->weighted_degree(mono) > trunc_) {
        truncated_ = true;
        return;
    }
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.truncated())
            truncated_ = true;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::optional<int> GradedSeries::degree() const
{
    std::optional<int> deg;
    for (auto& [mono, coeff] : terms_) {
        std::optional<int> cd = coeff.codegree();
        if (!cd)
            return std::nullopt;
        int i = vars_->weighted_degree(mono) - *cd;
        if (deg && *deg != i)
            return std::nullopt;
        deg = i;
    }
    return deg;
}

bool GradedSeries::is_homogeneous_of_degree(int i) const
{
    if (is_zero())
        return true;
    std::optional<int> d = degree();
    return d && *d == i;
}

void GradedSeries::check_shape(const GradedSeries& o) const
{
    if (!(*vars_ == *o.vars_))
        fail(ErrorKind::shape_mismatch, "series over different variable sets");
    if (trunc_ != o.trunc_)
        fail(ErrorKind::truncation_mismatch,
             "series truncated at " + std::to_string(trunc_) + " vs " + std::to_string(o.trunc_));
    if (ring_.get() != o.ring_.get())
        fail(ErrorKind::mismatched_table, "series over different coefficient rings");
}

GradedSeries GradedSeries::operator-() const
{
    GradedSeries r(vars_, trunc_, ring_);
    r.truncated_ = truncated_;
    for (auto& [mono, coeff] : terms_)
        r.terms_.emplace(mono, -coeff);
    return r;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const
{
    check_shape(o);
    GradedSeries r = *this;
    r.truncated_ = truncated_ || o.truncated_;
    for (auto& [mono, coeff] : o.terms_)
        r.add_term(mono, coeff);
    return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const
{
    return *this + (-o);
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const
{
    check_shape(o);
    GradedSeries r(vars_, trunc_, ring_);
    r.truncated_ = truncated_ || o.truncated_;
    std::vector<int> mono(size_t(vars_->count()));
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            for (size_t k = 0; k < mono.size(); ++k)
                mono[k] = m1[k] + m2[k];
            if (vars_->weighted_degree(mono) > trunc_) {
                r.truncated_ = true;
                continue;
            }
            r.add_term(mono, c1 * c2);
        }
    return r;
}

GradedSeries GradedSeries::scaled(const RElem& c) const
{
    GradedSeries r(vars_, trunc_, ring_);
    r.truncated_ = truncated_ || c.truncated();
    for (auto& [mono, coeff] : terms_)
        r.add_term(mono, coeff * c);
    return r;
}

GradedSeries GradedSeries::scaled_int(const Int& k) const
{
    GradedSeries r(vars_, trunc_, ring_);
    r.truncated_ = truncated_;
    if (k == 0)
        return r;
    for (auto& [mono, coeff] : terms_)
        r.terms_.emplace(mono, coeff.scaled(k));
    return r;
}

GradedSeries GradedSeries::truncate(int new_trunc) const
{
    if (new_trunc > trunc_)
        fail(ErrorKind::truncation_mismatch, "cannot extend a truncated series");
    GradedSeries r(vars_, new_trunc, ring_);
    r.truncated_ = truncated_;
    for (auto& [mono, coeff] : terms_)
        r.add_term(mono, coeff);
    return r;
}

GradedSeries GradedSeries::substitute(const std::vector<GradedSeries>& images) const
{
    if (int(images.size()) != vars_->count())
        fail(ErrorKind::shape_mismatch, "one image per variable required");
    for (int k = 0; k < vars_->count(); ++k) {
        const GradedSeries& img = images[size_t(k)];
        if (k > 0)
            images[0].check_shape(img);
        if (!img.has_zero_constant_term())
            fail(ErrorKind::nonzero_constant_term,
                 "image of " + vars_->var(k).name + " has a constant term");
        if (!img.is_zero()) {
            std::optional<int> d = img.degree();
            if (!d || *d != vars_->var(k).degree)
                fail(ErrorKind::degree_mismatch,
                     "image of " + vars_->var(k).name + " must be homogeneous of degree " +
                         std::to_string(vars_->var(k).degree));
        }
    }
    if (vars_->count() == 0)
        fail(ErrorKind::shape_mismatch, "substitute needs at least one variable");
    const VarsHandle& tvars = images[0].vars();
    int ttrunc = images[0].trunc();
    if (ttrunc != trunc_)
        fail(ErrorKind::truncation_mismatch, "substitution across truncation orders");

    GradedSeries out(tvars, ttrunc, ring_);
    out.truncated_ = truncated_;
    // power cache per variable
    std::vector<std::vector<GradedSeries>> pow(size_t(vars_->count()));
    auto power = [&](int k, int e) -> const GradedSeries& {
        auto& pk = pow[size_t(k)];
        if (pk.empty())
            pk.push_back(GradedSeries::constant(tvars, ttrunc, RElem::unit(ring_)));
        while (int(pk.size()) <= e)
            pk.push_back(pk.back() * images[size_t(k)]);
        return pk[size_t(e)];
    };
    for (auto& [mono, coeff] : terms_) {
        GradedSeries term = GradedSeries::constant(tvars, ttrunc, coeff);
        for (size_t k = 0; k < mono.size(); ++k)
            if (mono[k] > 0)
                term = term * power(int(k), mono[k]);
        out = out + term;
    }
    return out;
}

GradedSeries GradedSeries::kill_variables(const std::vector<int>& which) const
{
    std::vector<bool> kill(size_t(vars_->count()), false);
    for (int k : which)
        kill.at(size_t(k)) = true;
    std::vector<Var> kept;
    for (int k = 0; k < vars_->count(); ++k)
        if (!kill[size_t(k)])
            kept.push_back(vars_->var(k));
    GradedSeries out(std::make_shared<VarSet>(std::move(kept)), trunc_, ring_);
    out.truncated_ = truncated_;
    for (auto& [mono, coeff] : terms_) {
        bool dead = false;
        std::vector<int> reduced;
        for (size_t k = 0; k < mono.size(); ++k) {
            if (kill[k]) {
                if (mono[k] > 0)
                    dead = true;
            } else {
                reduced.push_back(mono[k]);
            }
        }
        if (!dead)
            out.add_term(reduced, coeff);
    }
    return out;
}

bool GradedSeries::operator==(const GradedSeries& o) const
{
    if (!(*vars_ == *o.vars_) || trunc_ != o.trunc_ || ring_.get() != o.ring_.get())
        return false;
    if (terms_.size() != o.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second))
            return false;
    return true;
}

std::string mono_str(const VarSet& vars, const std::vector<int>& mono)
{
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < mono.size(); ++k) {
        if (mono[k] == 0)
            continue;
        if (!first)
            os << "*";
        first = false;
        os << vars.var(int(k)).name;
        if (mono[k] > 1)
            os << "^" << mono[k];
    }
    if (first)
        return "1";
    return os.str();
}

std::string GradedSeries::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mono, coeff] : terms_) {
        std::string cs = coeff.str();
        bool neg = cs.size() > 1 && cs[0] == '-';
        bool simple = cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos;
        std::string body = neg && simple ? cs.substr(1) : cs;
        if (first) {
            if (neg && simple)
                os << "-";
        } else {
            os << ((neg && simple) ? " - " : " + ");
        }
        first = false;
        std::string ms = mono_str(*vars_, mono);
        if (!simple) {
            os << "(" << cs << ")";
            if (ms != "1")
                os << "*" << ms;
        } else if (ms == "1") {
            os << body;
        } else if (body == "1") {
            os << ms;
        } else {
            os << body << "*" << ms;
        }
    }
    return os.str();
}

GradedSeries elementary_symmetric(const VarsHandle& tvars, int trunc, const RingHandle& ring,
                                  int k)
{
    int n = tvars->count();
    GradedSeries s(tvars, trunc, ring);
    if (k == 0)
        return GradedSeries::constant(tvars, trunc, RElem::unit(ring));
    if (k > n)
        return s;
    // iterate over k-subsets
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[size_t(i)] = i;
    for (;;) {
        std::vector<int> mono(size_t(n), 0);
        for (int i : idx)
            mono[size_t(i)] = 1;
        s.add_term(mono, RElem::unit(ring));
        int pos = k - 1;
        while (pos >= 0 && idx[size_t(pos)] == n - k + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[size_t(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[size_t(i)] = idx[size_t(i - 1)] + 1;
    }
    return s;
}

bool is_symmetric(const GradedSeries& x)
{
    const VarsHandle& vars = x.vars();
    int n = vars->count();
    for (int k = 0; k < n; ++k)
        if (vars->var(k).degree != 1)
            return false;
    for (int k = 0; k + 1 < n; ++k) {
        for (auto& [mono, coeff] : x.terms()) {
            std::vector<int> swapped = mono;
            std::swap(swapped[size_t(k)], swapped[size_t(k) + 1]);
            if (!(x.coefficient(swapped) == coeff))
                return false;
        }
    }
    return true;
}

GradedSeries to_elementary_basis(const GradedSeries& x)
{
    const VarsHandle& tvars = x.vars();
    int n = tvars->count();
    for (int k = 0; k < n; ++k)
        if (tvars->var(k).degree != 1)
            fail(ErrorKind::shape_mismatch, "elementary basis conversion needs degree-1 roots");
    if (!is_symmetric(x))
        fail(ErrorKind::not_symmetric, "series is not symmetric in its variables");

    VarsHandle gvars = gamma_vars(n);
    GradedSeries out(gvars, x.trunc(), x.ring());
    out.set_truncated(x.truncated());

    std::vector<GradedSeries> esym;
    for (int k = 1; k <= n; ++k)
        esym.push_back(elementary_symmetric(tvars, x.trunc(), x.ring(), k));

    GradedSeries rest = x;
    while (!rest.is_zero()) {
        // the map is (degree asc, lex desc), so the first key is the
        // lex-greatest monomial of the lowest remaining degree
        auto lead = rest.terms().begin();
        const std::vector<int>& lambda = lead->first;
        RElem c = lead->second;
        for (size_t k = 0; k + 1 < lambda.size(); ++k)
            if (lambda[k] < lambda[k + 1])
                fail(ErrorKind::internal, "leading exponent of a symmetric series not dominant");
        std::vector<int> mu(size_t(n), 0);
        for (int k = 0; k < n; ++k) {
            int next = (k + 1 < n) ? lambda[size_t(k) + 1] : 0;
            mu[size_t(k)] = lambda[size_t(k)] - next;
        }
        out.add_term(mu, c);
        GradedSeries prod = GradedSeries::constant(tvars, x.trunc(), c);
        for (int k = 0; k < n; ++k)
            for (int e = 0; e < mu[size_t(k)]; ++e)
                prod = prod * esym[size_t(k)];
        rest = rest - prod;
    }
    return out;
}

GradedSeries gamma_to_roots(const GradedSeries& g, int n)
{
    VarsHandle tvars = torus_vars(n);
    std::vector<GradedSeries> images;
    for (int k = 0; k < g.vars()->count(); ++k) {
        int deg = g.vars()->var(k).degree;
        images.push_back(elementary_symmetric(tvars, g.trunc(), g.ring(), deg));
    }
    return g.substitute(images);
}

GradedSeries eliminate(const GradedSeries& relation, int k0)
{
    const VarsHandle& vars = relation.vars();
    int n = vars->count();
    if (k0 < 0 || k0 >= n)
        fail(ErrorKind::shape_mismatch, "eliminate: variable index out of range");
    if (!relation.is_zero() && !relation.degree())
        fail(ErrorKind::degree_mismatch, "eliminate needs a homogeneous relation");
    std::vector<int> linear(size_t(n), 0);
    linear[size_t(k0)] = 1;
    RElem u = relation.coefficient(linear);
    if (!u.is_unit())
        fail(ErrorKind::non_unit_linear_part,
             "linear part of the relation in " + vars->var(k0).name +
                 " is not a unit integer; elimination impossible over Z");
    Int uinv = u.unit_value();  // +/-1 is its own inverse

    GradedSeries sigma = GradedSeries::zero(vars, relation.trunc(), relation.ring());
    std::vector<GradedSeries> images;
    for (int k = 0; k < n; ++k)
        images.push_back(GradedSeries::variable(vars, relation.trunc(), relation.ring(), k));
    for (int step = 0; step <= relation.trunc(); ++step) {
        images[size_t(k0)] = sigma;
        GradedSeries residue = relation.substitute(images);
        if (residue.is_zero())
            break;
        sigma = sigma - residue.scaled_int(uinv);
    }
    images[size_t(k0)] = sigma;
    if (!relation.substitute(images).is_zero())
        fail(ErrorKind::internal, "elimination fixed point did not converge");
    return sigma.kill_variables({k0});
}

Int monomial_count(const std::vector<int>& degrees, int p)
{
    std::vector<Int> ways(size_t(p) + 1);
    ways[0] = 1;
    for (int d : degrees)
        for (int q = d; q <= p; ++q)
            ways[size_t(q)] += ways[size_t(q - d)];
    return ways[size_t(p)];
}

namespace {

void enum_monos(const std::vector<int>& degrees, size_t k, int remaining, std::vector<int>& cur,
                std::vector<std::vector<int>>& out)
{
    if (k == degrees.size()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    for (int e = 0; e * degrees[k] <= remaining; ++e) {
        cur[k] = e;
        enum_monos(degrees, k + 1, remaining - e * degrees[k], cur, out);
    }
    cur[k] = 0;
}

}  // namespace

std::vector<std::vector<int>> monomials_of_weighted_degree(const std::vector<int>& degrees,
                                                           int p)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(degrees.size(), 0);
    enum_monos(degrees, 0, p, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cobord::gps
