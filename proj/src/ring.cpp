#include "cobord/ring.hpp"

#include <sstream>

#include "cobord/errors.hpp"

namespace cobord {

namespace {

class IntegerRing final : public CoeffRing {
public:
    std::string name() const override { return "Z"; }
    int rank(int codegree) const override { return codegree == 0 ? 1 : 0; }
    std::optional<std::vector<Int>> mul_basis(int, int, int, int) const override
    {
        return std::vector<Int>{1};
    }
    std::string basis_label(int, int) const override { return "1"; }
};

class LaurentRing final : public CoeffRing {
public:
    std::string name() const override { return "Z[b,b^-1]"; }
    int rank(int) const override { return 1; }
    std::optional<std::vector<Int>> mul_basis(int, int, int, int) const override
    {
        return std::vector<Int>{1};
    }
    std::string basis_label(int codegree, int) const override
    {
        if (codegree == 0)
            return "1";
        if (codegree == 1)
            return "b";
        return "b^" + std::to_string(codegree);
    }
};

}  // namespace

RingHandle integer_ring()
{
    static const RingHandle r = std::make_shared<IntegerRing>();
    return r;
}

RingHandle laurent_ring()
{
    static const RingHandle r = std::make_shared<LaurentRing>();
    return r;
}

RElem RElem::unit(const RingHandle& ring)
{
    return integer(ring, 1);
}

RElem RElem::integer(const RingHandle& ring, const Int& n)
{
    RElem e(ring);
    if (n != 0) {
        if (ring->rank(0) != 1)
            fail(ErrorKind::internal, "ring has no unit component");
        e.comps_[0] = {n};
    }
    return e;
}

RElem RElem::basis(const RingHandle& ring, int codegree, int index)
{
    if (index < 0 || index >= ring->rank(codegree))
        fail(ErrorKind::internal, "basis index out of range");
    RElem e(ring);
    std::vector<Int> v(ring->rank(codegree));
    v[size_t(index)] = 1;
    e.comps_[codegree] = std::move(v);
    return e;
}

std::optional<int> RElem::codegree() const
{
    if (comps_.size() != 1)
        return std::nullopt;
    return comps_.begin()->first;
}

const std::vector<Int>* RElem::component(int codegree) const
{
    auto it = comps_.find(codegree);
    return it == comps_.end() ? nullptr : &it->second;
}

void RElem::set_component(int codegree, std::vector<Int> coords)
{
    if (int(coords.size()) != ring_->rank(codegree))
        fail(ErrorKind::internal, "component size vs ring rank");
    if (is_zero_vec(coords))
        comps_.erase(codegree);
    else
        comps_[codegree] = std::move(coords);
}

bool RElem::is_unit() const
{
    if (comps_.size() != 1)
        return false;
    auto& [d, v] = *comps_.begin();
    if (d != 0 || v.size() != 1)
        return false;
    return v[0] == 1 || v[0] == -1;
}

Int RElem::unit_value() const
{
    if (!is_unit())
        fail(ErrorKind::internal, "unit_value of non-unit");
    return comps_.begin()->second[0];
}

void RElem::prune()
{
    for (auto it = comps_.begin(); it != comps_.end();) {
        if (is_zero_vec(it->second))
            it = comps_.erase(it);
        else
            ++it;
    }
}

RElem RElem::operator-() const
{
    RElem r = *this;
    for (auto& [d, v] : r.comps_)
        for (Int& x : v)
            x = -x;
    return r;
}

RElem RElem::operator+(const RElem& o) const
{
    if (ring_.get() != o.ring_.get())
        fail(ErrorKind::mismatched_table, "ring elements from different rings");
    RElem r = *this;
    r.truncated_ = truncated_ || o.truncated_;
    for (auto& [d, v] : o.comps_) {
        auto it = r.comps_.find(d);
        if (it == r.comps_.end()) {
            r.comps_[d] = v;
        } else {
            for (size_t i = 0; i < v.size(); ++i)
                it->second[i] += v[i];
        }
    }
    r.prune();
    return r;
}

RElem RElem::operator-(const RElem& o) const
{
    return *this + (-o);
}

RElem RElem::operator*(const RElem& o) const
{
    if (ring_.get() != o.ring_.get())
        fail(ErrorKind::mismatched_table, "ring elements from different rings");
    RElem r(ring_);
    r.truncated_ = truncated_ || o.truncated_;
    for (auto& [d1, v1] : comps_)
        for (auto& [d2, v2] : o.comps_) {
            for (size_t i = 0; i < v1.size(); ++i) {
                if (v1[i] == 0)
                    continue;
                for (size_t j = 0; j < v2.size(); ++j) {
                    if (v2[j] == 0)
                        continue;
                    auto prod = ring_->mul_basis(d1, int(i), d2, int(j));
                    if (!prod) {
                        r.truncated_ = true;
                        continue;
                    }
                    if (prod->empty())
                        continue;
                    auto it = r.comps_.find(d1 + d2);
                    if (it == r.comps_.end())
                        it = r.comps_.emplace(d1 + d2, std::vector<Int>(prod->size())).first;
                    Int f = v1[i] * v2[j];
                    for (size_t k = 0; k < prod->size(); ++k)
                        it->second[k] += f * (*prod)[k];
                }
            }
        }
    r.prune();
    return r;
}

RElem RElem::scaled(const Int& k) const
{
    if (k == 0) {
        RElem r(ring_);
        r.truncated_ = truncated_;
        return r;
    }
    RElem r = *this;
    for (auto& [d, v] : r.comps_)
        for (Int& x : v)
            x *= k;
    return r;
}

std::string RElem::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, v] : comps_)
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0)
                continue;
            Int c = v[i];
            if (first) {
                if (c < 0)
                    os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            Int ab = abs(c);
            std::string label = ring_->basis_label(d, int(i));
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

}  // namespace cobord
