#include "cobord/lazard_log.hpp"

#include <sstream>

#include "cobord/errors.hpp"
#include "cobord/intmat.hpp"

namespace cobord::lazard {

namespace {

void trim(MExp& e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

}  // namespace

int mexp_codegree(const MExp& e)
{
    int d = 0;
    for (size_t k = 0; k < e.size(); ++k)
        d += int(k + 1) * e[k];
    return d;
}

MPoly mpoly_const(const Rat& c)
{
    MPoly p;
    if (c != 0)
        p.terms[{}] = c;
    return p;
}

MPoly mpoly_sym(int d)
{
    MPoly p;
    MExp e(size_t(d), 0);
    e[size_t(d) - 1] = 1;
    p.terms[e] = 1;
    return p;
}

MPoly mpoly_add(const MPoly& a, const MPoly& b)
{
    MPoly r = a;
    for (auto& [e, c] : b.terms) {
        Rat& slot = r.terms[e];
        slot += c;
        if (slot == 0)
            r.terms.erase(e);
    }
    return r;
}

MPoly mpoly_scale(const MPoly& a, const Rat& c)
{
    if (c == 0)
        return {};
    MPoly r = a;
    for (auto& [e, v] : r.terms)
        v *= c;
    return r;
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b)
{
    MPoly r;
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            MExp e(std::max(ea.size(), eb.size()), 0);
            for (size_t k = 0; k < ea.size(); ++k)
                e[k] += ea[k];
            for (size_t k = 0; k < eb.size(); ++k)
                e[k] += eb[k];
            trim(e);
            Rat& slot = r.terms[e];
            slot += ca * cb;
            if (slot == 0)
                r.terms.erase(e);
        }
    return r;
}

std::string mpoly_str(const MPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.terms) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_coeff = (ac != 1) || e.empty();
        if (need_coeff)
            os << ac.get_str();
        bool needs_star = need_coeff;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            if (needs_star)
                os << "*";
            needs_star = true;
            os << "m" << (k + 1);
            if (e[k] > 1)
                os << "^" << e[k];
        }
    }
    return os.str();
}

namespace {

// univariate polynomial over MPoly, index = power of the variable
using USeries = std::vector<MPoly>;

USeries umul(const USeries& a, const USeries& b, int depth)
{
    USeries r(size_t(depth) + 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size() && int(i + j) <= depth; ++j) {
            if (b[j].is_zero())
                continue;
            r[i + j] = mpoly_add(r[i + j], mpoly_mul(a[i], b[j]));
        }
    }
    return r;
}

}  // namespace

LogOracle::LogOracle(int max_codegree) : max_codegree_(max_codegree)
{
    const int depth = max_codegree + 1;  // total degree in u, v

    // log(t) = t + m_1 t^2 + ... + m_{depth-1} t^depth
    USeries log_series(size_t(depth) + 1);
    log_series[1] = mpoly_const(1);
    for (int d = 1; d < depth; ++d)
        log_series[size_t(d) + 1] = mpoly_sym(d);

    // exp = compositional inverse: exp(log(t)) = t
    std::vector<USeries> log_pow(size_t(depth) + 1);  // log^j
    log_pow[1] = log_series;
    for (int j = 2; j <= depth; ++j)
        log_pow[size_t(j)] = umul(log_pow[size_t(j) - 1], log_series, depth);

    USeries exp_series(size_t(depth) + 1);
    exp_series[1] = mpoly_const(1);
    for (int k = 2; k <= depth; ++k) {
        MPoly acc;
        for (int j = 1; j < k; ++j)
            acc = mpoly_add(acc, mpoly_mul(exp_series[size_t(j)], log_pow[size_t(j)][size_t(k)]));
        exp_series[size_t(k)] = mpoly_scale(acc, -1);
    }

    // bivariate: s = log(u) + log(v); G = exp(s); both truncated at depth
    using BKey = std::pair<int, int>;
    std::map<BKey, MPoly> s;
    for (int k = 1; k <= depth; ++k) {
        if (!log_series[size_t(k)].is_zero()) {
            s[{k, 0}] = log_series[size_t(k)];
            s[{0, k}] = log_series[size_t(k)];
        }
    }
    auto bmul = [&](const std::map<BKey, MPoly>& a, const std::map<BKey, MPoly>& b) {
        std::map<BKey, MPoly> r;
        for (auto& [ea, pa] : a)
            for (auto& [eb, pb] : b) {
                BKey e{ea.first + eb.first, ea.second + eb.second};
                if (e.first + e.second > depth)
                    continue;
                auto it = r.find(e);
                MPoly prod = mpoly_mul(pa, pb);
                if (it == r.end())
                    r.emplace(e, std::move(prod));
                else
                    it->second = mpoly_add(it->second, prod);
            }
        return r;
    };

    std::map<BKey, MPoly> g;
    std::map<BKey, MPoly> s_pow = s;
    for (int k = 1; k <= depth; ++k) {
        if (k > 1)
            s_pow = bmul(s_pow, s);
        const MPoly& ek = exp_series[size_t(k)];
        if (ek.is_zero())
            continue;
        for (auto& [e, p] : s_pow) {
            MPoly scaled = mpoly_mul(p, ek);
            auto it = g.find(e);
            if (it == g.end())
                g.emplace(e, std::move(scaled));
            else
                it->second = mpoly_add(it->second, scaled);
        }
    }

    for (int i = 1; i < depth; ++i)
        for (int j = 1; i + j <= depth; ++j) {
            auto it = g.find({i, j});
            images_[{i, j}] = (it == g.end()) ? MPoly{} : it->second;
        }
}

const MPoly& LogOracle::generator_image(int i, int j) const
{
    auto it = images_.find({i, j});
    if (it == images_.end())
        fail(ErrorKind::insufficient_table,
             "oracle depth " + std::to_string(max_codegree_) + " has no image for a" +
                 std::to_string(i) + "," + std::to_string(j));
    return it->second;
}

MPoly LogOracle::monomial_image(const AMono& m) const
{
    MPoly r = mpoly_const(1);
    for (auto& [g, e] : m.factors)
        for (int k = 0; k < e; ++k)
            r = mpoly_mul(r, generator_image(g.i, g.j));
    return r;
}

MPoly LogOracle::poly_image(const APoly& p) const
{
    MPoly r;
    for (auto& [m, c] : p)
        r = mpoly_add(r, mpoly_scale(monomial_image(m), Rat(c)));
    return r;
}

MPoly to_log_presentation(const TableHandle& table, const RElem& x)
{
    if (table_of(x.ring()).get() != table.get())
        fail(ErrorKind::mismatched_table, "element does not belong to this table");
    LogOracle oracle(table->max_codegree());
    MPoly out;
    for (auto& [d, coords] : x.components())
        for (size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] == 0)
                continue;
            MPoly img = oracle.poly_image(table->basis(d)[k]);
            out = mpoly_add(out, mpoly_scale(img, Rat(coords[k])));
        }
    return out;
}

std::vector<MExp> mexp_of_codegree(int d)
{
    // partitions of d encoded as exponent vectors of m_1..m_d
    std::vector<MExp> out;
    MExp cur(size_t(std::max(d, 0)), 0);
    // recursive descent over symbol index
    struct Rec {
        int d;
        std::vector<MExp>& out;
        MExp& cur;
        void go(int sym, int remaining)
        {
            if (remaining == 0) {
                MExp e = cur;
                while (!e.empty() && e.back() == 0)
                    e.pop_back();
                out.push_back(e);
                return;
            }
            if (sym > remaining)
                return;
            go(sym + 1, remaining);
            for (int cnt = 1; cnt * sym <= remaining; ++cnt) {
                cur[size_t(sym) - 1] = cnt;
                go(sym + 1, remaining - cnt * sym);
            }
            cur[size_t(sym) - 1] = 0;
        }
    } rec{d, out, cur};
    if (d == 0) {
        out.push_back({});
        return out;
    }
    rec.go(1, d);
    std::sort(out.begin(), out.end());
    return out;
}

int mpoly_span_dim(const std::vector<MPoly>& polys)
{
    // index all exponents
    std::map<MExp, int> cols;
    for (const MPoly& p : polys)
        for (auto& [e, c] : p.terms)
            cols.emplace(e, 0);
    int nc = 0;
    for (auto& [e, idx] : cols)
        idx = nc++;
    IMat mat(int(polys.size()), std::max(nc, 1));
    for (size_t r = 0; r < polys.size(); ++r) {
        // clear denominators row by row; scaling does not change the span dim
        Int lcm = 1;
        for (auto& [e, c] : polys[r].terms) {
            Int den = c.get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (auto& [e, c] : polys[r].terms) {
            Rat scaled = c * Rat(lcm);
            mat.at(int(r), cols[e]) = scaled.get_num();
        }
    }
    return rank_of(std::move(mat));
}

}  // namespace cobord::lazard
