#include "cobord/intmat.hpp"

#include <algorithm>

#include "cobord/errors.hpp"

namespace cobord {

IMat IMat::identity(int n)
{
    IMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::vector<Int> IMat::row(int r) const
{
    return std::vector<Int>(a.begin() + size_t(r) * cols, a.begin() + size_t(r + 1) * cols);
}

void IMat::set_row(int r, const std::vector<Int>& v)
{
    std::copy(v.begin(), v.end(), a.begin() + size_t(r) * cols);
}

IMat transpose(const IMat& m)
{
    IMat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            t.at(c, r) = m.at(r, c);
    return t;
}

IMat mat_mul(const IMat& x, const IMat& y)
{
    if (x.cols != y.rows)
        fail(ErrorKind::shape_mismatch, "matrix product shape");
    IMat z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const Int& f = x.at(r, k);
            if (f == 0)
                continue;
            for (int c = 0; c < y.cols; ++c)
                z.at(r, c) += f * y.at(k, c);
        }
    return z;
}

std::vector<Int> row_times_mat(const std::vector<Int>& v, const IMat& m)
{
    if (int(v.size()) != m.rows)
        fail(ErrorKind::shape_mismatch, "row-vector product shape");
    std::vector<Int> out(m.cols);
    for (int k = 0; k < m.rows; ++k) {
        if (v[k] == 0)
            continue;
        for (int c = 0; c < m.cols; ++c)
            out[c] += v[k] * m.at(k, c);
    }
    return out;
}

namespace {

void swap_rows(IMat& m, int i, int j)
{
    if (i == j)
        return;
    for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IMat& m, int i)
{
    for (int c = 0; c < m.cols; ++c)
        m.at(i, c) = -m.at(i, c);
}

// row i -= q * row j
void submul_row(IMat& m, int i, int j, const Int& q)
{
    if (q == 0)
        return;
    for (int c = 0; c < m.cols; ++c)
        m.at(i, c) -= q * m.at(j, c);
}

void swap_cols(IMat& m, int i, int j)
{
    if (i == j)
        return;
    for (int r = 0; r < m.rows; ++r)
        std::swap(m.at(r, i), m.at(r, j));
}

void negate_col(IMat& m, int i)
{
    for (int r = 0; r < m.rows; ++r)
        m.at(r, i) = -m.at(r, i);
}

// col i -= q * col j
void submul_col(IMat& m, int i, int j, const Int& q)
{
    if (q == 0)
        return;
    for (int r = 0; r < m.rows; ++r)
        m.at(r, i) -= q * m.at(r, j);
}

}  // namespace

std::vector<int> hnf_rows(IMat& m)
{
    std::vector<int> pivots;
    int top = 0;
    for (int col = 0; col < m.cols && top < m.rows; ++col) {
        // Euclidean loop on rows >= top within this column; pivot choice is
        // the smallest nonzero |entry| (ties to the lowest row index).
        for (;;) {
            int best = -1;
            for (int r = top; r < m.rows; ++r) {
                if (m.at(r, col) == 0)
                    continue;
                if (best < 0 || mpz_cmpabs(m.at(r, col).get_mpz_t(), m.at(best, col).get_mpz_t()) < 0)
                    best = r;
            }
            if (best < 0)
                break;
            swap_rows(m, top, best);
            if (m.at(top, col) < 0)
                negate_row(m, top);
            bool clean = true;
            for (int r = top + 1; r < m.rows; ++r) {
                if (m.at(r, col) == 0)
                    continue;
                Int q = floor_div(m.at(r, col), m.at(top, col));
                submul_row(m, r, top, q);
                if (m.at(r, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (top < m.rows && m.at(top, col) != 0) {
            // reduce entries above the pivot into [0, pivot)
            for (int r = 0; r < top; ++r) {
                Int q = floor_div(m.at(r, col), m.at(top, col));
                submul_row(m, r, top, q);
            }
            pivots.push_back(col);
            ++top;
        }
    }
    return pivots;
}

void hnf_reduce(const IMat& h, const std::vector<int>& pivots, std::vector<Int>& v)
{
    if (int(v.size()) != h.cols)
        fail(ErrorKind::shape_mismatch, "hnf_reduce vector length");
    for (size_t k = 0; k < pivots.size(); ++k) {
        int c = pivots[k];
        if (v[c] == 0)
            continue;
        Int q = floor_div(v[c], h.at(int(k), c));
        if (q == 0)
            continue;
        for (int j = 0; j < h.cols; ++j)
            v[j] -= q * h.at(int(k), j);
    }
}

bool hnf_contains(const IMat& h, const std::vector<int>& pivots, std::vector<Int> v)
{
    hnf_reduce(h, pivots, v);
    return is_zero_vec(v);
}

Diagonalization diagonalize(IMat m)
{
    Diagonalization d;
    d.v = IMat::identity(m.cols);
    d.w = IMat::identity(m.cols);
    int t = 0;
    const int nmin = std::min(m.rows, m.cols);
    while (t < nmin) {
        // smallest nonzero |entry| in the trailing submatrix
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                if (m.at(r, c) == 0)
                    continue;
                if (pr < 0 || mpz_cmpabs(m.at(r, c).get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0)
            break;
        swap_rows(m, t, pr);
        if (pc != t) {
            swap_cols(m, t, pc);
            swap_cols(d.v, t, pc);
            swap_rows(d.w, t, pc);
        }
        if (m.at(t, t) < 0) {
            negate_col(m, t);
            negate_col(d.v, t);
            negate_row(d.w, t);
        }
        bool again = false;
        for (int r = t + 1; r < m.rows; ++r) {
            Int q = floor_div(m.at(r, t), m.at(t, t));
            submul_row(m, r, t, q);
            if (m.at(r, t) != 0)
                again = true;
        }
        for (int c = t + 1; c < m.cols; ++c) {
            Int q = floor_div(m.at(t, c), m.at(t, t));
            submul_col(m, c, t, q);
            // inverse op on w: row t += q * row c
            for (int j = 0; j < d.w.cols; ++j)
                d.w.at(t, j) += q * d.w.at(c, j);
            submul_col(d.v, c, t, q);
            if (m.at(t, c) != 0)
                again = true;
        }
        if (!again)
            ++t;
    }
    d.rank = t;
    d.divisors.reserve(t);
    for (int i = 0; i < t; ++i)
        d.divisors.push_back(m.at(i, i));
    return d;
}

int rank_of(IMat m)
{
    return int(hnf_rows(m).size());
}

IMat kernel_basis(const IMat& m)
{
    Diagonalization d = diagonalize(m);
    IMat k(m.cols - d.rank, m.cols);
    for (int j = d.rank; j < m.cols; ++j)
        for (int r = 0; r < m.cols; ++r)
            k.at(j - d.rank, r) = d.v.at(r, j);
    return k;
}

IMat lattice_hnf(IMat m)
{
    std::vector<int> pivots = hnf_rows(m);
    IMat h(int(pivots.size()), m.cols);
    for (int r = 0; r < h.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            h.at(r, c) = m.at(r, c);
    return h;
}

bool lattice_subset(const IMat& sub, const IMat& super)
{
    IMat h = lattice_hnf(super);
    std::vector<int> pivots(h.rows);
    for (int r = 0; r < h.rows; ++r) {
        int c = 0;
        while (c < h.cols && h.at(r, c) == 0)
            ++c;
        pivots[r] = c;
    }
    for (int r = 0; r < sub.rows; ++r)
        if (!hnf_contains(h, pivots, sub.row(r)))
            return false;
    return true;
}

bool lattice_equal(const IMat& x, const IMat& y)
{
    return lattice_hnf(x) == lattice_hnf(y);
}

}  // namespace cobord
