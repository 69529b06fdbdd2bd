#pragma once
#include <vector>

#include "cobord/numeric.hpp"

namespace cobord {

// Dense matrix over Z (arbitrary precision). Row-major.
struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static IMat identity(int n);

    std::vector<Int> row(int r) const;
    void set_row(int r, const std::vector<Int>& v);

    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IMat transpose(const IMat& m);
IMat mat_mul(const IMat& x, const IMat& y);
std::vector<Int> row_times_mat(const std::vector<Int>& v, const IMat& m);

// Row Hermite normal form, in place. Canonical: pivots positive, entries
// above a pivot reduced into [0, pivot), zero rows moved to the bottom.
// Returns the pivot column of each nonzero row (strictly increasing).
std::vector<int> hnf_rows(IMat& m);

// Reduce v modulo the row lattice of an HNF matrix. Canonical coset
// representative; v is modified in place.
void hnf_reduce(const IMat& h, const std::vector<int>& pivots, std::vector<Int>& v);

// True if v lies in the row lattice of the HNF matrix.
bool hnf_contains(const IMat& h, const std::vector<int>& pivots, std::vector<Int> v);

// Diagonalization U*A*V = D by unimodular row and column operations.
// Only the column transform V and its inverse W are retained; the nonzero
// diagonal entries (made positive) come first. The row lattice of A equals
// { y*V^{-1} : y in the diagonal lattice }, and the column-space data is
// enough both to present the quotient Z^cols / rowlattice(A) and to read
// off an integral kernel basis.
struct Diagonalization {
    std::vector<Int> divisors;  // nonzero diagonal entries, positive
    IMat v;                     // cols x cols, unimodular
    IMat w;                     // v^{-1}
    int rank = 0;
};

Diagonalization diagonalize(IMat m);

// Rank (over Q, equivalently over Z for spanning purposes).
int rank_of(IMat m);

// Basis of the integer kernel {x : m x = 0} as rows; the lattice is
// saturated in Z^cols.
IMat kernel_basis(const IMat& m);

// Canonical HNF of the row lattice spanned by the rows of m (zero rows
// dropped). Equal lattices produce equal matrices.
IMat lattice_hnf(IMat m);

bool lattice_subset(const IMat& sub, const IMat& super);
bool lattice_equal(const IMat& x, const IMat& y);

}  // namespace cobord
