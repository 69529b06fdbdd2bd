#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cobord/numeric.hpp"

namespace cobord {

// A graded commutative ring whose graded pieces are free Z-modules of known
// finite rank, indexed by codegree (the negated cohomological degree, so the
// coefficient rings of interest live at codegrees >= 0 while Z[b, b^-1]
// occupies every codegree). Implementations: the integers in codegree 0,
// the Laurent ring Z[b, b^-1] with b in codegree 1, and the Lazard ring
// truncated at a maximum codegree.
class CoeffRing {
public:
    virtual ~CoeffRing() = default;

    virtual std::string name() const = 0;
    virtual int rank(int codegree) const = 0;

    // Truncation bound: codegrees above it are cut off rather than zero.
    virtual std::optional<int> truncation_bound() const { return std::nullopt; }

    // Product of basis elements (d1, i) * (d2, j) in coordinates at d1+d2.
    // nullopt means the product fell past the truncation bound.
    virtual std::optional<std::vector<Int>> mul_basis(int d1, int i, int d2, int j) const = 0;

    virtual std::string basis_label(int codegree, int index) const = 0;
};

using RingHandle = std::shared_ptr<const CoeffRing>;

RingHandle integer_ring();   // Z concentrated in codegree 0
RingHandle laurent_ring();   // Z[b, b^-1], deg b = -1 (codegree 1)

// Element of a CoeffRing: sparse coordinates per codegree. The truncated
// flag is sticky: it records that some component was dropped past the
// ring's truncation bound while producing this value.
class RElem {
public:
    RElem() = default;
    explicit RElem(RingHandle ring) : ring_(std::move(ring)) {}

    static RElem unit(const RingHandle& ring);
    static RElem integer(const RingHandle& ring, const Int& n);
    static RElem basis(const RingHandle& ring, int codegree, int index);

    const RingHandle& ring() const { return ring_; }
    bool same_ring(const RElem& o) const { return ring_.get() == o.ring_.get(); }

    bool is_zero() const { return comps_.empty(); }
    bool truncated() const { return truncated_; }
    void set_truncated(bool t) { truncated_ = t; }

    // nullopt for 0 (any codegree) and for mixed elements
    std::optional<int> codegree() const;
    bool is_homogeneous() const { return comps_.size() <= 1; }

    const std::map<int, std::vector<Int>>& components() const { return comps_; }
    const std::vector<Int>* component(int codegree) const;
    void set_component(int codegree, std::vector<Int> coords);

    // +/- 1 in codegree 0; what "unit coefficient" means for elimination
    bool is_unit() const;
    Int unit_value() const;  // the +/-1, requires is_unit()

    RElem operator-() const;
    RElem operator+(const RElem& o) const;
    RElem operator-(const RElem& o) const;
    RElem operator*(const RElem& o) const;
    RElem scaled(const Int& k) const;

    bool operator==(const RElem& o) const
    {
        return ring_.get() == o.ring_.get() && comps_ == o.comps_;
    }

    std::string str() const;

private:
    RingHandle ring_;
    std::map<int, std::vector<Int>> comps_;
    bool truncated_ = false;

    void prune();
};

}  // namespace cobord
