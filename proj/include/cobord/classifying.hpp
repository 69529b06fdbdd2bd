#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cobord/fgl.hpp"
#include "cobord/gps.hpp"
#include "cobord/intmat.hpp"
#include "cobord/lazard.hpp"

namespace cobord::classifying {

// One basis element of a truncated graded piece: a generator monomial
// together with a coefficient-ring basis vector at the complementary
// codegree.
struct BasisElement {
    std::vector<int> mono;
    int codegree = 0;
    int index = 0;
    bool operator==(const BasisElement& o) const
    {
        return mono == o.mono && codegree == o.codegree && index == o.index;
    }
};

// A named classifying-space ring: free graded power series presentation
// over its generators, with any quotient relation recorded as a witness
// (possibly over a larger pre-elimination generator set).
struct RingPresentation {
    std::string name;
    gps::VarsHandle vars;
    std::vector<gps::GradedSeries> relations;
    int trunc = 0;
    RingHandle ring;

    int rank(int degree) const;
    std::vector<BasisElement> graded_basis(int degree) const;

    bool operator==(const RingPresentation& o) const;
};

struct TorusRing {
    int n = 0;
    RingPresentation pres;

    gps::GradedSeries chern_root(int k) const;  // t_{k+1} as a series
};

// Omega(BT_n): L[[t_1..t_n]] with deg t_i = 1, truncated at D.
TorusRing ring_BT(int n, int trunc, const lazard::TableHandle& table);

struct GlRing {
    int n = 0;
    RingPresentation pres;                     // gamma_1..gamma_n, deg k
    std::vector<gps::GradedSeries> elem_sym;   // restriction images e_k(t)

    // restriction along BT_n -> BGL_n: substitute gamma_k -> e_k(t)
    gps::GradedSeries restrict_to_torus(const gps::GradedSeries& x) const;
};

GlRing ring_BGL(int n, int trunc, const lazard::TableHandle& table);

struct SlRing {
    int n = 0;
    RingPresentation pres;            // gamma_2..gamma_n after elimination
    gps::GradedSeries det_relation;   // c1(det) over gamma_1..gamma_n
    gps::GradedSeries gamma1_image;   // the eliminated generator, over gamma_2..gamma_n
};

// Omega(BSL_n): quotient of Omega(BGL_n) by c1(det) = formal sum of the
// Chern roots, eliminated along its unit linear part gamma_1.
SlRing ring_BSL(int n, int trunc, const lazard::TableHandle& table);

// c1 of the character (n_1..n_n): [n_1](t_1) +_F ... +_F [n_n](t_n).
gps::GradedSeries chern_of_character(const std::vector<Int>& chi, const fgl::FglTable& f,
                                     const TorusRing& ambient);

// Homomorphism of tori recorded on character lattices: row r expresses the
// pullback of the r-th basis character of the target torus in the source
// basis. Composition is matrix product.
struct CharacterMap {
    int src_rank = 0;
    int dst_rank = 0;
    IMat mat;  // dst_rank x src_rank
};

CharacterMap character_map(int src_rank, int dst_rank, IMat mat);
CharacterMap compose(const CharacterMap& outer, const CharacterMap& inner);

// Induced map Omega(BT_dst) -> Omega(BT_src): t_r -> chern(row r).
gps::GradedSeries torus_pullback(const CharacterMap& m, const fgl::FglTable& f,
                                 const TorusRing& src, const gps::GradedSeries& x);

using Permutation = std::vector<int>;

std::vector<Permutation> symmetric_group_gens(int n);

// Fixed subspace of one (t-degree, codegree) slice of Omega(BT_n) under a
// permutation group: integer kernel of the stacked (sigma - id) matrices on
// the monomial space, tensored with the codegree piece of the coefficients.
struct InvariantSlice {
    int t_degree = 0;
    int codegree = 0;
    IMat monomial_basis;  // rows: invariant vectors over the monomials at t_degree
    int coeff_rank = 0;   // rank of the coefficient ring at this codegree
    int rank() const { return monomial_basis.rows * coeff_rank; }
};

// Invariant monomial vectors at one t-degree (saturated integer kernel).
IMat invariant_monomials(int n, int t_degree, const std::vector<Permutation>& gens);

std::vector<InvariantSlice> weyl_invariants(const TorusRing& ambient,
                                            const std::vector<Permutation>& gens,
                                            int max_t_degree, int min_codegree,
                                            int max_codegree);

// Per-t-degree comparison of the BGL_n restriction image with the full
// symmetric-group invariants; the coefficient factor is common to both
// sides, so the monomial spaces decide every slice.
struct InvariantComparison {
    int t_degree = 0;
    int invariant_dim = 0;
    int image_dim = 0;
    bool rational_equal = false;
    bool image_contained = false;  // integral containment of spanning lattices
    bool integral_equal = false;   // observed, stronger than the rational statement
};

std::vector<InvariantComparison> compare_invariants_with_gl(int n, int max_t_degree);

}  // namespace cobord::classifying
