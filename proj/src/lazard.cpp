#include "cobord/lazard.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "cobord/errors.hpp"

namespace cobord::lazard {

bool gen_before(const Gen& a, const Gen& b)
{
    if (a.codegree() != b.codegree())
        return a.codegree() < b.codegree();
    return a.i > b.i;
}

bool gen_eq(const Gen& a, const Gen& b)
{
    return a.i == b.i && a.j == b.j;
}

int AMono::codegree() const
{
    int d = 0;
    for (auto& [g, e] : factors)
        d += g.codegree() * e;
    return d;
}

AMono amono_mul(const AMono& a, const AMono& b)
{
    AMono r;
    auto it = a.factors.begin(), jt = b.factors.begin();
    while (it != a.factors.end() && jt != b.factors.end()) {
        if (gen_eq(it->first, jt->first)) {
            r.factors.emplace_back(it->first, it->second + jt->second);
            ++it;
            ++jt;
        } else if (gen_before(it->first, jt->first)) {
            r.factors.push_back(*it++);
        } else {
            r.factors.push_back(*jt++);
        }
    }
    r.factors.insert(r.factors.end(), it, a.factors.end());
    r.factors.insert(r.factors.end(), jt, b.factors.end());
    return r;
}

bool amono_before(const AMono& a, const AMono& b)
{
    int da = a.codegree(), db = b.codegree();
    if (da != db)
        return da < db;
    auto it = a.factors.begin(), jt = b.factors.begin();
    while (it != a.factors.end() && jt != b.factors.end()) {
        if (gen_eq(it->first, jt->first)) {
            if (it->second != jt->second)
                return it->second > jt->second;
            ++it;
            ++jt;
        } else if (gen_before(it->first, jt->first)) {
            return true;  // a has the earlier generator with positive exponent
        } else {
            return false;
        }
    }
    if (it != a.factors.end())
        return true;
    return false;
}

bool amono_eq(const AMono& a, const AMono& b)
{
    if (a.factors.size() != b.factors.size())
        return false;
    for (size_t k = 0; k < a.factors.size(); ++k)
        if (!gen_eq(a.factors[k].first, b.factors[k].first) ||
            a.factors[k].second != b.factors[k].second)
            return false;
    return true;
}

std::string amono_str(const AMono& m)
{
    if (m.is_one())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [g, e] : m.factors) {
        if (!first)
            os << "*";
        first = false;
        if (g.i < 10 && g.j < 10)
            os << "a" << g.i << g.j;
        else
            os << "a" << g.i << "_" << g.j;
        if (e > 1)
            os << "^" << e;
    }
    return os.str();
}

AMono amono_parse(const std::string& s)
{
    if (s == "1")
        return AMono::one();
    AMono m;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'a')
            fail(ErrorKind::cache_corruption, "bad monomial: " + s);
        ++pos;
        size_t num_start = pos;
        while (pos < s.size() && isdigit(s[pos]))
            ++pos;
        std::string digits = s.substr(num_start, pos - num_start);
        Gen g;
        if (pos < s.size() && s[pos] == '_') {
            g.i = std::stoi(digits);
            ++pos;
            num_start = pos;
            while (pos < s.size() && isdigit(s[pos]))
                ++pos;
            g.j = std::stoi(s.substr(num_start, pos - num_start));
        } else {
            if (digits.size() != 2)
                fail(ErrorKind::cache_corruption, "bad generator in monomial: " + s);
            g.i = digits[0] - '0';
            g.j = digits[1] - '0';
        }
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            num_start = pos;
            while (pos < s.size() && isdigit(s[pos]))
                ++pos;
            e = std::stoi(s.substr(num_start, pos - num_start));
        }
        m = amono_mul(m, AMono{{{g, e}}});
        if (pos < s.size()) {
            if (s[pos] != '*')
                fail(ErrorKind::cache_corruption, "bad monomial: " + s);
            ++pos;
        }
    }
    return m;
}

APoly apoly_one()
{
    APoly p;
    p[AMono::one()] = 1;
    return p;
}

APoly apoly_gen(int i, int j)
{
    APoly p;
    p[AMono::gen(i, j)] = 1;
    return p;
}

APoly apoly_add(const APoly& a, const APoly& b)
{
    APoly r = a;
    for (auto& [m, c] : b) {
        Int& slot = r[m];
        slot += c;
        if (slot == 0)
            r.erase(m);
    }
    return r;
}

APoly apoly_sub(const APoly& a, const APoly& b)
{
    return apoly_add(a, apoly_scale(b, -1));
}

APoly apoly_scale(const APoly& a, const Int& k)
{
    if (k == 0)
        return {};
    APoly r = a;
    for (auto& [m, c] : r)
        c *= k;
    return r;
}

APoly apoly_mul_mono(const APoly& a, const AMono& m)
{
    APoly r;
    for (auto& [n, c] : a)
        r[amono_mul(n, m)] = c;
    return r;
}

APoly apoly_mul(const APoly& a, const APoly& b)
{
    APoly r;
    for (auto& [m, c] : a)
        for (auto& [n, d] : b) {
            AMono mn = amono_mul(m, n);
            Int& slot = r[mn];
            slot += c * d;
            if (slot == 0)
                r.erase(mn);
        }
    return r;
}

std::string apoly_str(const APoly& p)
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p) {
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Int ab = abs(c);
        std::string label = amono_str(m);
        if (ab != 1 || label == "1")
            os << ab.get_str();
        if (label != "1") {
            if (ab != 1)
                os << "*";
            os << label;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Relation harvesting: trivariate series over the free ring, truncated by
// total degree in (u,v,w).

namespace {

using Exp3 = std::array<int, 3>;

struct Tri {
    int depth = 0;
    std::map<Exp3, APoly> terms;

    void add_term(const Exp3& e, const APoly& p)
    {
        if (p.empty())
            return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, p);
        } else {
            it->second = apoly_add(it->second, p);
            if (it->second.empty())
                terms.erase(it);
        }
    }
};

int deg3(const Exp3& e) { return e[0] + e[1] + e[2]; }

Tri tri_var(int depth, int which)
{
    Tri t;
    t.depth = depth;
    Exp3 e{0, 0, 0};
    e[size_t(which)] = 1;
    t.terms[e] = apoly_one();
    return t;
}

Tri tri_mul(const Tri& a, const Tri& b)
{
    Tri r;
    r.depth = a.depth;
    for (auto& [ea, pa] : a.terms)
        for (auto& [eb, pb] : b.terms) {
            Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (deg3(e) > r.depth)
                continue;
            r.add_term(e, apoly_mul(pa, pb));
        }
    return r;
}

Tri tri_add(const Tri& a, const Tri& b)
{
    Tri r = a;
    for (auto& [e, p] : b.terms)
        r.add_term(e, p);
    return r;
}

Tri tri_sub(const Tri& a, const Tri& b)
{
    Tri r = a;
    for (auto& [e, p] : b.terms)
        r.add_term(e, apoly_scale(p, -1));
    return r;
}

// F(x, y) = x + y + sum_{i,j>=1} A_ij x^i y^j for series with zero constant
// term, truncated at the ambient depth.
Tri fgl_compose(const Tri& x, const Tri& y)
{
    int depth = x.depth;
    Tri r = tri_add(x, y);
    std::vector<Tri> xp{x}, yp{y};
    for (int k = 2; k <= depth; ++k) {
        xp.push_back(tri_mul(xp.back(), x));
        yp.push_back(tri_mul(yp.back(), y));
    }
    for (int i = 1; i < depth; ++i)
        for (int j = 1; i + j <= depth; ++j) {
            Tri term = tri_mul(xp[size_t(i - 1)], yp[size_t(j - 1)]);
            APoly aij = apoly_gen(i, j);
            Tri scaled;
            scaled.depth = depth;
            for (auto& [e, p] : term.terms)
                scaled.add_term(e, apoly_mul(p, aij));
            r = tri_add(r, scaled);
        }
    return r;
}

}  // namespace

std::vector<APoly> Harvest::flatten(int up_to_codegree) const
{
    std::vector<APoly> out;
    for (int d = 0; d <= up_to_codegree && d < int(by_codegree.size()); ++d)
        for (const APoly& p : by_codegree[size_t(d)])
            out.push_back(p);
    return out;
}

Harvest harvest_relations(int max_codegree)
{
    Harvest h;
    h.max_codegree = max_codegree;
    h.expansion_degree = max_codegree + 2;
    h.by_codegree.assign(size_t(max_codegree) + 2, {});
    const int depth = h.expansion_degree;

    Tri u = tri_var(depth, 0), v = tri_var(depth, 1), w = tri_var(depth, 2);
    Tri zero;
    zero.depth = depth;

    auto collect = [&](const Tri& t) {
        for (auto& [e, p] : t.terms) {
            if (p.empty())
                continue;
            int d = deg3(e) - 1;
            if (d >= 0 && d < int(h.by_codegree.size()))
                h.by_codegree[size_t(d)].push_back(p);
        }
    };

    // F(u, 0) - u  (vacuous for this parametrization, harvested regardless)
    collect(tri_sub(fgl_compose(u, zero), u));
    // F(u, v) - F(v, u)
    collect(tri_sub(fgl_compose(u, v), fgl_compose(v, u)));
    // F(F(u, v), w) - F(u, F(v, w))
    collect(tri_sub(fgl_compose(fgl_compose(u, v), w), fgl_compose(u, fgl_compose(v, w))));
    return h;
}

// ---------------------------------------------------------------------------
// Table construction

namespace {

// all generators of codegree <= bound, in order
std::vector<Gen> generators_up_to(int bound)
{
    std::vector<Gen> gens;
    for (int d = 1; d <= bound; ++d)
        for (int i = d; i >= 1; --i)
            gens.push_back(Gen{i, d + 1 - i});
    return gens;
}

void enumerate_monomials(const std::vector<Gen>& gens, size_t from, int remaining, AMono& cur,
                         std::vector<AMono>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t k = from; k < gens.size(); ++k) {
        int cd = gens[k].codegree();
        if (cd > remaining)
            continue;
        cur.factors.emplace_back(gens[k], 0);
        for (int e = 1; e * cd <= remaining; ++e) {
            cur.factors.back().second = e;
            enumerate_monomials(gens, k + 1, remaining - e * cd, cur, out);
        }
        cur.factors.pop_back();
    }
}

std::vector<AMono> monomials_of_codegree(int d)
{
    std::vector<AMono> out;
    AMono cur;
    enumerate_monomials(generators_up_to(d), 0, d, cur, out);
    std::sort(out.begin(), out.end(), amono_before);
    return out;
}

}  // namespace

std::shared_ptr<const Table> Table::build(int max_codegree, const BuildLimits& limits)
{
    auto table = std::shared_ptr<Table>(new Table());
    table->max_codegree_ = max_codegree;
    table->harvest_ = harvest_relations(max_codegree);
    table->pieces_.resize(size_t(max_codegree) + 1);

    for (int d = 0; d <= max_codegree; ++d) {
        Piece& piece = table->pieces_[size_t(d)];
        piece.monomials = monomials_of_codegree(d);
        for (size_t k = 0; k < piece.monomials.size(); ++k)
            piece.index.emplace(piece.monomials[k], int(k));

        IMat mat = table->relation_matrix(d);
        if (long(mat.rows) * long(mat.cols) > limits.max_matrix_entries)
            fail(ErrorKind::resource_limit,
                 "relation matrix at codegree " + std::to_string(d) + " needs " +
                     std::to_string(long(mat.rows) * long(mat.cols)) +
                     " entries, over the configured budget of " +
                     std::to_string(limits.max_matrix_entries));

        IMat hnf_copy = mat;
        piece.hnf_pivots = hnf_rows(hnf_copy);
        piece.hnf = IMat(int(piece.hnf_pivots.size()), mat.cols);
        for (int r = 0; r < piece.hnf.rows; ++r)
            for (int c = 0; c < mat.cols; ++c)
                piece.hnf.at(r, c) = hnf_copy.at(r, c);

        Diagonalization diag = diagonalize(std::move(mat));
        for (const Int& dv : diag.divisors)
            if (dv != 1)
                fail(ErrorKind::internal,
                     "relation lattice at codegree " + std::to_string(d) +
                         " has a non-unit elementary divisor; harvested relations are "
                         "incomplete");
        piece.rel_rank = diag.rank;
        piece.v = std::move(diag.v);

        int cols = int(piece.monomials.size());
        for (int b = piece.rel_rank; b < cols; ++b) {
            std::vector<Int> rep = diag.w.row(b);
            hnf_reduce(piece.hnf, piece.hnf_pivots, rep);
            APoly p;
            for (int c = 0; c < cols; ++c)
                if (rep[size_t(c)] != 0)
                    p[piece.monomials[size_t(c)]] = rep[size_t(c)];
            piece.basis.push_back(std::move(p));
        }
    }

    table->check_low_codegrees(ErrorKind::internal);
    return table;
}

void Table::check_low_codegrees(ErrorKind kind) const
{
    if (rank(0) != 1 || basis(0)[0].size() != 1 || !basis(0)[0].begin()->first.is_one() ||
        basis(0)[0].begin()->second != 1)
        fail(kind, "codegree-0 basis is not {1}");
    if (max_codegree_ >= 1) {
        bool ok = rank(1) == 1;
        if (ok) {
            const APoly& b = basis(1)[0];
            ok = b.size() == 1 && amono_eq(b.begin()->first, AMono::gen(1, 1)) &&
                 b.begin()->second == 1;
        }
        if (!ok)
            fail(kind, "codegree-1 basis is not {a11}");
    }
}

std::shared_ptr<const Table> Table::from_parts(int max_codegree, std::vector<PieceData> parts)
{
    if (int(parts.size()) != max_codegree + 1)
        fail(ErrorKind::cache_corruption, "piece count vs max codegree");
    auto table = std::shared_ptr<Table>(new Table());
    table->max_codegree_ = max_codegree;
    table->harvest_ = harvest_relations(max_codegree);
    table->pieces_.resize(size_t(max_codegree) + 1);

    for (int d = 0; d <= max_codegree; ++d) {
        Piece& piece = table->pieces_[size_t(d)];
        PieceData& part = parts[size_t(d)];
        piece.monomials = monomials_of_codegree(d);
        for (size_t k = 0; k < piece.monomials.size(); ++k)
            piece.index.emplace(piece.monomials[k], int(k));
        const int cols = int(piece.monomials.size());
        if (part.v.rows != cols || part.v.cols != cols)
            fail(ErrorKind::cache_corruption,
                 "transform shape at codegree " + std::to_string(d));
        if (part.rel_rank < 0 || part.rel_rank > cols ||
            int(part.basis.size()) != cols - part.rel_rank)
            fail(ErrorKind::cache_corruption, "rank data at codegree " + std::to_string(d));
        piece.v = std::move(part.v);
        piece.rel_rank = part.rel_rank;
        piece.basis = std::move(part.basis);
    }

    // Reductions must send every harvested relation to zero and every basis
    // representative to its own coordinate vector.
    for (int d = 1; d <= max_codegree; ++d)
        for (const APoly& rel : table->harvest_.by_codegree[size_t(d)]) {
            std::vector<Int> vec(table->monomials(d).size());
            for (auto& [m, c] : rel) {
                int idx = table->monomial_index(d, m);
                if (idx < 0)
                    fail(ErrorKind::cache_corruption, "relation monomial missing");
                vec[size_t(idx)] = c;
            }
            if (!is_zero_vec(table->reduce(d, vec)))
                fail(ErrorKind::cache_corruption,
                     "cached reduction does not kill a harvested relation at codegree " +
                         std::to_string(d));
        }
    for (int d = 0; d <= max_codegree; ++d)
        for (int k = 0; k < table->rank(d); ++k) {
            std::vector<Int> vec(table->monomials(d).size());
            for (auto& [m, c] : table->basis(d)[size_t(k)]) {
                int idx = table->monomial_index(d, m);
                if (idx < 0)
                    fail(ErrorKind::cache_corruption, "basis monomial missing");
                vec[size_t(idx)] = c;
            }
            std::vector<Int> coords = table->reduce(d, vec);
            for (int t = 0; t < int(coords.size()); ++t)
                if (coords[size_t(t)] != (t == k ? 1 : 0))
                    fail(ErrorKind::cache_corruption,
                         "cached basis is not a section of the reduction at codegree " +
                             std::to_string(d));
        }
    table->check_low_codegrees(ErrorKind::cache_corruption);
    return table;
}

const IMat& Table::transform(int codegree) const
{
    return pieces_.at(size_t(codegree)).v;
}

int Table::relation_rank(int codegree) const
{
    return pieces_.at(size_t(codegree)).rel_rank;
}

IMat Table::relation_matrix(int codegree) const
{
    const Piece& piece = pieces_.at(size_t(codegree));
    int cols = int(piece.monomials.size());
    std::vector<std::vector<Int>> rows;
    for (int e = 1; e <= codegree && e < int(harvest_.by_codegree.size()); ++e) {
        if (e > max_codegree_)
            break;
        const std::vector<AMono>& mults = pieces_[size_t(codegree - e)].monomials;
        for (const APoly& rel : harvest_.by_codegree[size_t(e)])
            for (const AMono& m : mults) {
                APoly prod = apoly_mul_mono(rel, m);
                std::vector<Int> row(static_cast<size_t>(cols));
                for (auto& [mono, c] : prod) {
                    auto it = piece.index.find(mono);
                    if (it == piece.index.end())
                        fail(ErrorKind::internal, "relation monomial missing from enumeration");
                    row[size_t(it->second)] = c;
                }
                rows.push_back(std::move(row));
            }
    }
    IMat mat(int(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        mat.set_row(int(r), rows[r]);
    return mat;
}

int Table::rank(int codegree) const
{
    if (codegree < 0 || codegree > max_codegree_)
        return 0;
    const Piece& p = pieces_[size_t(codegree)];
    return int(p.monomials.size()) - p.rel_rank;
}

const std::vector<AMono>& Table::monomials(int codegree) const
{
    return pieces_.at(size_t(codegree)).monomials;
}

const std::vector<APoly>& Table::basis(int codegree) const
{
    return pieces_.at(size_t(codegree)).basis;
}

std::vector<Int> Table::reduce(int codegree, const std::vector<Int>& monomial_vec) const
{
    const Piece& p = pieces_.at(size_t(codegree));
    if (monomial_vec.size() != p.monomials.size())
        fail(ErrorKind::shape_mismatch, "reduce vector length");
    std::vector<Int> y = row_times_mat(monomial_vec, p.v);
    return std::vector<Int>(y.begin() + p.rel_rank, y.end());
}

int Table::monomial_index(int codegree, const AMono& m) const
{
    const Piece& p = pieces_.at(size_t(codegree));
    auto it = p.index.find(m);
    return it == p.index.end() ? -1 : it->second;
}

std::string Table::basis_label(int codegree, int index) const
{
    const APoly& p = pieces_.at(size_t(codegree)).basis.at(size_t(index));
    if (p.size() == 1 && p.begin()->second == 1)
        return amono_str(p.begin()->first);
    return "(" + apoly_str(p) + ")";
}

// ---------------------------------------------------------------------------
// The Lazard ring as a CoeffRing

namespace {

class LazardRing final : public CoeffRing {
public:
    explicit LazardRing(TableHandle table) : table_(std::move(table)) {}

    std::string name() const override
    {
        return "L(max_codegree=" + std::to_string(table_->max_codegree()) + ")";
    }

    int rank(int codegree) const override { return table_->rank(codegree); }

    std::optional<int> truncation_bound() const override { return table_->max_codegree(); }

    std::optional<std::vector<Int>> mul_basis(int d1, int i, int d2, int j) const override
    {
        if (d1 + d2 > table_->max_codegree())
            return std::nullopt;
        APoly prod = apoly_mul(table_->basis(d1)[size_t(i)], table_->basis(d2)[size_t(j)]);
        std::vector<Int> vec(table_->monomials(d1 + d2).size());
        for (auto& [m, c] : prod) {
            int idx = table_->monomial_index(d1 + d2, m);
            if (idx < 0)
                fail(ErrorKind::internal, "product monomial missing from enumeration");
            vec[size_t(idx)] = c;
        }
        return table_->reduce(d1 + d2, vec);
    }

    std::string basis_label(int codegree, int index) const override
    {
        return table_->basis_label(codegree, index);
    }

    const TableHandle& table() const { return table_; }

private:
    TableHandle table_;
};

}  // namespace

RingHandle lazard_ring(const TableHandle& table)
{
    std::lock_guard<std::mutex> lock(table->ring_mutex_);
    if (auto cached = table->ring_cache_.lock())
        return cached;
    auto ring = std::make_shared<const LazardRing>(table);
    table->ring_cache_ = ring;
    return ring;
}

TableHandle table_of(const RingHandle& ring)
{
    auto lr = std::dynamic_pointer_cast<const LazardRing>(ring);
    return lr ? lr->table() : nullptr;
}

RElem normalize(const TableHandle& table, const APoly& expr)
{
    RElem out(lazard_ring(table));
    std::map<int, std::vector<Int>> by_codegree;
    bool truncated = false;
    for (auto& [m, c] : expr) {
        int d = m.codegree();
        if (d > table->max_codegree()) {
            truncated = true;
            continue;
        }
        auto it = by_codegree.find(d);
        if (it == by_codegree.end())
            it = by_codegree.emplace(d, std::vector<Int>(table->monomials(d).size())).first;
        int idx = table->monomial_index(d, m);
        if (idx < 0)
            fail(ErrorKind::internal, "monomial missing from enumeration");
        it->second[size_t(idx)] += c;
    }
    for (auto& [d, vec] : by_codegree)
        out.set_component(d, table->reduce(d, vec));
    out.set_truncated(truncated);
    return out;
}

RElem basis_element(const TableHandle& table, int codegree, int index)
{
    return RElem::basis(lazard_ring(table), codegree, index);
}

RElem lazard_mul(const RElem& x, const RElem& y)
{
    if (!x.same_ring(y))
        fail(ErrorKind::mismatched_table, "elements built against different tables");
    return x * y;
}

}  // namespace cobord::lazard
