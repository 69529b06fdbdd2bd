#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cobord/ring.hpp"

namespace cobord::gps {

// Generators of a graded power series ring, each with a positive
// cohomological degree (1 for Chern roots t_i, k for gamma_k).
struct Var {
    std::string name;
    int degree = 1;
    bool operator==(const Var& o) const { return name == o.name && degree == o.degree; }
};

class VarSet {
public:
    explicit VarSet(std::vector<Var> vars);
    int count() const { return int(vars_.size()); }
    const Var& var(int k) const { return vars_.at(size_t(k)); }
    const std::vector<Var>& vars() const { return vars_; }
    int weighted_degree(const std::vector<int>& expo) const;
    bool operator==(const VarSet& o) const { return vars_ == o.vars_; }

private:
    std::vector<Var> vars_;
};

using VarsHandle = std::shared_ptr<const VarSet>;

VarsHandle torus_vars(int n);                     // t1..tn, degree 1
VarsHandle gamma_vars(int n, int from = 1);       // gamma_from..gamma_n, degree k
VarsHandle single_var(const std::string& name);   // one degree-1 variable

// Graded-lexicographic order on exponent vectors: weighted degree first,
// then plain lexicographic.
struct MonoLess {
    std::vector<int> degrees;
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse element of A[[t]]_gr truncated in weighted t-degree. A term is a
// monomial with a nonzero coefficient in the coefficient ring; for a series
// homogeneous of cohomological degree i, the coefficient of a monomial of
// weighted degree p is homogeneous of codegree p-i. The truncated flag is
// sticky and records that terms (or coefficient components) were dropped
// past a truncation bound while producing this value.
class GradedSeries {
public:
    using TermMap = std::map<std::vector<int>, RElem, MonoLess>;

    GradedSeries(VarsHandle vars, int trunc, RingHandle ring);

    static GradedSeries zero(const VarsHandle& vars, int trunc, const RingHandle& ring);
    static GradedSeries constant(const VarsHandle& vars, int trunc, const RElem& value);
    static GradedSeries variable(const VarsHandle& vars, int trunc, const RingHandle& ring,
                                 int k);

    const VarsHandle& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    const RingHandle& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool truncated() const { return truncated_; }
    void set_truncated(bool t) { truncated_ = t; }

    bool is_zero() const { return terms_.empty(); }
    bool has_zero_constant_term() const;
    RElem coefficient(const std::vector<int>& mono) const;
    void add_term(const std::vector<int>& mono, const RElem& coeff);

    // homogeneous cohomological degree; nullopt for mixed or zero series
    std::optional<int> degree() const;
    bool is_homogeneous_of_degree(int i) const;

    GradedSeries operator-() const;
    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries scaled(const RElem& c) const;
    GradedSeries scaled_int(const Int& k) const;

    GradedSeries truncate(int new_trunc) const;

    // Composition: replace every variable by its image; images must share a
    // target shape, have zero constant term, and be homogeneous of the
    // variable's degree.
    GradedSeries substitute(const std::vector<GradedSeries>& images) const;

    // Quotient by (subset of variables): kill every term that uses one of
    // them, reindex over the remaining variables.
    GradedSeries kill_variables(const std::vector<int>& which) const;

    bool operator==(const GradedSeries& o) const;

    std::string str() const;

private:
    VarsHandle vars_;
    int trunc_ = 0;
    RingHandle ring_;
    TermMap terms_;
    bool truncated_ = false;

    void check_shape(const GradedSeries& o) const;
};

// e_k(t_1..t_n) as a series over a torus variable set.
GradedSeries elementary_symmetric(const VarsHandle& tvars, int trunc, const RingHandle& ring,
                                  int k);

bool is_symmetric(const GradedSeries& x);

// Rewrite a symmetric series over degree-1 variables in the elementary
// symmetric generators gamma_1..gamma_n (deg gamma_k = k). Exact round
// trip: substituting e_k back reproduces the input up to truncation.
GradedSeries to_elementary_basis(const GradedSeries& x);

// Substitute gamma_k -> e_k(t_1..t_n); input is over gamma_vars(n, from).
GradedSeries gamma_to_roots(const GradedSeries& g, int n);

// Solve a relation r = u*g_k0 + (higher order) for g_k0, u a unit integer.
// Returns the series sigma over the remaining variables with
// r[g_k0 -> sigma] = 0 up to truncation. Degreewise fixed-point iteration.
GradedSeries eliminate(const GradedSeries& relation, int k0);

// Number of monomials of weighted degree p over the given variable degrees.
Int monomial_count(const std::vector<int>& degrees, int p);

// All exponent vectors of weighted degree p, in MonoLess order.
std::vector<std::vector<int>> monomials_of_weighted_degree(const std::vector<int>& degrees,
                                                           int p);

std::string mono_str(const VarSet& vars, const std::vector<int>& mono);

}  // namespace cobord::gps
