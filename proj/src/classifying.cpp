#include "cobord/classifying.hpp"

#include <algorithm>

#include "cobord/errors.hpp"

namespace cobord::classifying {

int RingPresentation::rank(int degree) const
{
    std::vector<int> degs;
    for (const gps::Var& v : vars->vars())
        degs.push_back(v.degree);
    Int total = 0;
    for (int p = 0; p <= trunc; ++p) {
        int cr = ring->rank(p - degree);
        if (cr == 0)
            continue;
        total += gps::monomial_count(degs, p) * cr;
    }
    if (!total.fits_sint_p())
        fail(ErrorKind::resource_limit, "graded piece rank overflows int");
    return int(total.get_si());
}

std::vector<BasisElement> RingPresentation::graded_basis(int degree) const
{
    std::vector<int> degs;
    for (const gps::Var& v : vars->vars())
        degs.push_back(v.degree);
    std::vector<BasisElement> out;
    for (int p = 0; p <= trunc; ++p) {
        int cr = ring->rank(p - degree);
        if (cr == 0)
            continue;
        for (const std::vector<int>& mono : gps::monomials_of_weighted_degree(degs, p))
            for (int k = 0; k < cr; ++k)
                out.push_back(BasisElement{mono, p - degree, k});
    }
    return out;
}

bool RingPresentation::operator==(const RingPresentation& o) const
{
    if (name != o.name || trunc != o.trunc || ring.get() != o.ring.get())
        return false;
    if (!(*vars == *o.vars))
        return false;
    if (relations.size() != o.relations.size())
        return false;
    for (size_t k = 0; k < relations.size(); ++k)
        if (!(relations[k] == o.relations[k]))
            return false;
    return true;
}

gps::GradedSeries TorusRing::chern_root(int k) const
{
    return gps::GradedSeries::variable(pres.vars, pres.trunc, pres.ring, k);
}

TorusRing ring_BT(int n, int trunc, const lazard::TableHandle& table)
{
    if (n < 1)
        fail(ErrorKind::flag_validation, "torus rank must be >= 1");
    if (table->max_codegree() < trunc)
        fail(ErrorKind::insufficient_table,
             "truncation " + std::to_string(trunc) + " needs table depth >= " +
                 std::to_string(trunc) + ", have " + std::to_string(table->max_codegree()));
    TorusRing r;
    r.n = n;
    r.pres.name = "BT_" + std::to_string(n);
    r.pres.vars = gps::torus_vars(n);
    r.pres.trunc = trunc;
    r.pres.ring = lazard::lazard_ring(table);
    return r;
}

gps::GradedSeries GlRing::restrict_to_torus(const gps::GradedSeries& x) const
{
    return x.substitute(elem_sym);
}

GlRing ring_BGL(int n, int trunc, const lazard::TableHandle& table)
{
    if (n < 1)
        fail(ErrorKind::flag_validation, "rank must be >= 1");
    if (table->max_codegree() < trunc)
        fail(ErrorKind::insufficient_table,
             "truncation " + std::to_string(trunc) + " needs table depth >= " +
                 std::to_string(trunc) + ", have " + std::to_string(table->max_codegree()));
    GlRing r;
    r.n = n;
    r.pres.name = "BGL_" + std::to_string(n);
    r.pres.vars = gps::gamma_vars(n);
    r.pres.trunc = trunc;
    r.pres.ring = lazard::lazard_ring(table);
    gps::VarsHandle tvars = gps::torus_vars(n);
    for (int k = 1; k <= n; ++k)
        r.elem_sym.push_back(gps::elementary_symmetric(tvars, trunc, r.pres.ring, k));
    return r;
}

SlRing ring_BSL(int n, int trunc, const lazard::TableHandle& table)
{
    GlRing gl = ring_BGL(n, trunc, table);
    TorusRing bt = ring_BT(n, trunc, table);
    fgl::FglTable univ = fgl::universal_fgl(std::max(trunc, 1), table);

    // c1 of the determinant character: the formal sum of the Chern roots
    gps::GradedSeries det = bt.chern_root(0);
    for (int k = 1; k < n; ++k)
        det = fgl::fgl_sum(univ, det, bt.chern_root(k));

    gps::GradedSeries det_relation = gps::to_elementary_basis(det);
    gps::GradedSeries gamma1_image = gps::eliminate(det_relation, 0);
    RingPresentation pres;
    pres.name = "BSL_" + std::to_string(n);
    pres.vars = gps::gamma_vars(n, 2);
    pres.trunc = trunc;
    pres.ring = gl.pres.ring;
    pres.relations.push_back(det_relation);
    return SlRing{n, std::move(pres), std::move(det_relation), std::move(gamma1_image)};
}

gps::GradedSeries chern_of_character(const std::vector<Int>& chi, const fgl::FglTable& f,
                                     const TorusRing& ambient)
{
    if (int(chi.size()) != ambient.n)
        fail(ErrorKind::shape_mismatch, "character length vs torus rank");
    if (f.order < ambient.pres.trunc)
        fail(ErrorKind::truncation_mismatch, "law order too small for the ambient truncation");
    const int trunc = ambient.pres.trunc;
    gps::GradedSeries acc =
        gps::GradedSeries::zero(ambient.pres.vars, trunc, ambient.pres.ring);
    if (trunc < 1)
        return acc;
    for (int k = 0; k < ambient.n; ++k) {
        if (chi[size_t(k)] == 0)
            continue;
        gps::GradedSeries nk = fgl::n_series(f, chi[size_t(k)], trunc);
        gps::GradedSeries at_root = nk.substitute({ambient.chern_root(k)});
        acc = acc.is_zero() ? at_root : fgl::fgl_sum(f, acc, at_root);
    }
    return acc;
}

CharacterMap character_map(int src_rank, int dst_rank, IMat mat)
{
    if (mat.rows != dst_rank || mat.cols != src_rank)
        fail(ErrorKind::shape_mismatch, "character matrix shape");
    return CharacterMap{src_rank, dst_rank, std::move(mat)};
}

CharacterMap compose(const CharacterMap& outer, const CharacterMap& inner)
{
    // outer: mid -> dst over src=mid; inner: src -> mid
    if (outer.src_rank != inner.dst_rank)
        fail(ErrorKind::shape_mismatch, "character map composition shape");
    return CharacterMap{inner.src_rank, outer.dst_rank, mat_mul(outer.mat, inner.mat)};
}

gps::GradedSeries torus_pullback(const CharacterMap& m, const fgl::FglTable& f,
                                 const TorusRing& src, const gps::GradedSeries& x)
{
    if (m.src_rank != src.n)
        fail(ErrorKind::shape_mismatch, "character map source vs torus rank");
    if (x.vars()->count() != m.dst_rank)
        fail(ErrorKind::shape_mismatch, "series variables vs character map target");
    std::vector<gps::GradedSeries> images;
    for (int r = 0; r < m.dst_rank; ++r) {
        std::vector<Int> chi = m.mat.row(r);
        images.push_back(chern_of_character(chi, f, src));
    }
    return x.substitute(images);
}

std::vector<Permutation> symmetric_group_gens(int n)
{
    std::vector<Permutation> gens;
    if (n < 2)
        return gens;
    Permutation swap01(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        swap01[size_t(k)] = k;
    std::swap(swap01[0], swap01[1]);
    gens.push_back(swap01);
    if (n > 2) {
        Permutation cycle(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
            cycle[size_t(k)] = (k + 1) % n;
        gens.push_back(cycle);
    }
    return gens;
}

IMat invariant_monomials(int n, int t_degree, const std::vector<Permutation>& gens)
{
    std::vector<int> ones(size_t(n), 1);
    std::vector<std::vector<int>> monos = gps::monomials_of_weighted_degree(ones, t_degree);
    std::map<std::vector<int>, int> index;
    for (size_t k = 0; k < monos.size(); ++k)
        index[monos[k]] = int(k);
    const int m = int(monos.size());
    IMat stack(int(gens.size()) * m, m);
    int row = 0;
    for (const Permutation& sigma : gens) {
        if (int(sigma.size()) != n)
            fail(ErrorKind::shape_mismatch, "permutation length vs rank");
        for (int a = 0; a < m; ++a, ++row) {
            // sigma sends t_k to t_{sigma(k)}, so exponent e moves to e'
            // with e'[sigma(k)] = e[k]
            std::vector<int> moved(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k)
                moved[size_t(sigma[size_t(k)])] = monos[size_t(a)][size_t(k)];
            int b = index.at(moved);
            stack.at(row, b) += 1;
            stack.at(row, a) -= 1;
        }
    }
    return kernel_basis(stack);
}

std::vector<InvariantSlice> weyl_invariants(const TorusRing& ambient,
                                            const std::vector<Permutation>& gens,
                                            int max_t_degree, int min_codegree,
                                            int max_codegree)
{
    if (max_t_degree > ambient.pres.trunc)
        fail(ErrorKind::truncation_mismatch, "window exceeds the ambient truncation");
    std::vector<InvariantSlice> out;
    for (int p = 0; p <= max_t_degree; ++p) {
        IMat basis = invariant_monomials(ambient.n, p, gens);
        for (int q = min_codegree; q <= max_codegree; ++q) {
            int cr = ambient.pres.ring->rank(q);
            if (cr == 0)
                continue;
            out.push_back(InvariantSlice{p, q, basis, cr});
        }
    }
    return out;
}

std::vector<InvariantComparison> compare_invariants_with_gl(int n, int max_t_degree)
{
    std::vector<InvariantComparison> out;
    std::vector<Permutation> gens = symmetric_group_gens(n);
    RingHandle zring = integer_ring();
    gps::VarsHandle tvars = gps::torus_vars(n);

    std::vector<gps::GradedSeries> esym;
    for (int k = 1; k <= n; ++k)
        esym.push_back(gps::elementary_symmetric(tvars, max_t_degree, zring, k));

    std::vector<int> ones(size_t(n), 1);
    std::vector<int> gamma_degs;
    for (int k = 1; k <= n; ++k)
        gamma_degs.push_back(k);

    for (int p = 0; p <= max_t_degree; ++p) {
        std::vector<std::vector<int>> monos = gps::monomials_of_weighted_degree(ones, p);
        std::map<std::vector<int>, int> index;
        for (size_t k = 0; k < monos.size(); ++k)
            index[monos[k]] = int(k);

        // image lattice: expansions of the e^mu with weighted degree p
        std::vector<std::vector<int>> mus = gps::monomials_of_weighted_degree(gamma_degs, p);
        IMat image(int(mus.size()), int(monos.size()));
        for (size_t r = 0; r < mus.size(); ++r) {
            gps::GradedSeries prod =
                gps::GradedSeries::constant(tvars, max_t_degree, RElem::unit(zring));
            for (int k = 0; k < n; ++k)
                for (int e = 0; e < mus[r][size_t(k)]; ++e)
                    prod = prod * esym[size_t(k)];
            for (auto& [mono, coeff] : prod.terms()) {
                const std::vector<Int>* c0 = coeff.component(0);
                image.at(int(r), index.at(mono)) = c0 ? (*c0)[0] : Int(0);
            }
        }

        IMat invariants = invariant_monomials(n, p, gens);
        InvariantComparison cmp;
        cmp.t_degree = p;
        cmp.invariant_dim = rank_of(invariants);
        cmp.image_dim = rank_of(image);
        cmp.rational_equal = cmp.invariant_dim == cmp.image_dim;
        cmp.image_contained = lattice_subset(image, invariants);
        cmp.integral_equal = lattice_equal(image, invariants);
        out.push_back(cmp);
    }
    return out;
}

}  // namespace cobord::classifying
