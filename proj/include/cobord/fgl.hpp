#pragma once
#include <map>
#include <string>

#include "cobord/gps.hpp"
#include "cobord/lazard.hpp"
#include "cobord/ring.hpp"

namespace cobord::fgl {

enum class Law { universal, additive, multiplicative, custom };

const char* law_name(Law law);

// Coefficient table of a formal group law F(u,v) = u + v + sum b_ij u^i v^j,
// truncated at total degree `order` in the series variables. b_ij is
// homogeneous of codegree i+j-1 in the coefficient ring; b_ij = b_ji.
struct FglTable {
    Law law = Law::custom;
    std::string name;
    RingHandle ring;
    int order = 0;
    std::map<std::pair<int, int>, RElem> coeff;

    RElem b(int i, int j) const;
};

// Coefficients are the canonical classes of the generators. Requires
// table depth >= order-1.
FglTable universal_fgl(int order, const lazard::TableHandle& table);

// F(u,v) = u + v over Z.
FglTable additive_fgl(int order);

// F(u,v) = u + v - b*u*v over Z[b, b^-1], deg b = -1. With this sign the
// n-series expands to (1 - (1-b*u)^n)/b.
FglTable multiplicative_fgl(int order);

// Structural checks only (symmetry and coefficient grading); associativity
// of a custom table is the caller's business, or make_specialization's.
FglTable custom_fgl(std::string name, RingHandle ring, int order,
                    std::map<std::pair<int, int>, RElem> coeff);

// F(x, y) for series with zero constant term, homogeneous of degree 1,
// over the same shape; needs F.order >= truncation order.
gps::GradedSeries fgl_sum(const FglTable& f, const gps::GradedSeries& x,
                          const gps::GradedSeries& y);

// u as a series, the common starting point for inverse/n-series.
gps::GradedSeries uni_variable(const RingHandle& ring, int order);

bool is_composition_invertible(const gps::GradedSeries& s);

// chi(u) with F(u, chi(u)) = 0 mod u^{order+1}, solved degree by degree.
gps::GradedSeries formal_inverse(const FglTable& f, int order);

// [n](u); negative n via the formal inverse.
gps::GradedSeries n_series(const FglTable& f, const Int& n, int order);

// Truncated identities F(u,0)=u, F(u,v)=F(v,u), F(F(u,v),w)=F(u,F(v,w)).
bool check_axioms(const FglTable& f, int order);

// Display form "u + v + a11*u*v + ...".
std::string fgl_str(const FglTable& f);

}  // namespace cobord::fgl
