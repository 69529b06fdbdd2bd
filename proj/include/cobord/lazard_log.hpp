#pragma once
#include <map>
#include <string>
#include <vector>

#include "cobord/lazard.hpp"
#include "cobord/numeric.hpp"

namespace cobord::lazard {

// Polynomials over Q in symbols m_1, m_2, ... with m_d of codegree d.
// Exponent keys are trimmed of trailing zeros.
using MExp = std::vector<int>;

struct MPoly {
    std::map<MExp, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const MPoly& o) const { return terms == o.terms; }
};

MPoly mpoly_const(const Rat& c);
MPoly mpoly_sym(int d);  // m_d
MPoly mpoly_add(const MPoly& a, const MPoly& b);
MPoly mpoly_scale(const MPoly& a, const Rat& c);
MPoly mpoly_mul(const MPoly& a, const MPoly& b);
int mexp_codegree(const MExp& e);
std::string mpoly_str(const MPoly& p);

// The rational side of the Lazard ring: with log(u) = u + sum m_d u^{d+1},
// the series exp(log u + log v) is a formal group law over Q[m_1, m_2, ...],
// and sending each generator A_ij to its (i,j) coefficient is a ring map
// that kills every harvested relation. Expansion happens once per oracle,
// up to the total degree needed for the requested codegree range. This path
// is deliberately independent of Table reduction: it is the cross-check.
class LogOracle {
public:
    explicit LogOracle(int max_codegree);

    int max_codegree() const { return max_codegree_; }

    // image of A_ij, defined for i,j >= 1 with i+j-1 <= max_codegree
    const MPoly& generator_image(int i, int j) const;
    MPoly monomial_image(const AMono& m) const;
    MPoly poly_image(const APoly& p) const;

private:
    int max_codegree_;
    std::map<std::pair<int, int>, MPoly> images_;
};

// Rational-logarithm presentation of a canonical-coordinate element.
MPoly to_log_presentation(const TableHandle& table, const RElem& x);

// m-monomials of a given codegree (dimension of the degree piece of Q[m]).
std::vector<MExp> mexp_of_codegree(int d);

// Rational dimension of the span of a family of MPolys.
int mpoly_span_dim(const std::vector<MPoly>& polys);

}  // namespace cobord::lazard
