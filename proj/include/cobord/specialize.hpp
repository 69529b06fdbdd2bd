#pragma once
#include <map>

#include "cobord/classifying.hpp"
#include "cobord/fgl.hpp"
#include "cobord/gps.hpp"
#include "cobord/lazard.hpp"

namespace cobord::specialize {

// Base change out of the Lazard ring classified by a formal group law on
// the target: a_ij goes to the target coefficient b_ij. Construction maps
// every harvested relation and insists on zero, so a non-associative
// target table is rejected here rather than corrupting results later.
class SpecializationMap {
public:
    SpecializationMap(fgl::FglTable target, lazard::TableHandle table);

    const RingHandle& target_ring() const { return target_.ring; }
    const fgl::FglTable& target() const { return target_; }
    const lazard::TableHandle& table() const { return table_; }

    RElem apply(const RElem& x) const;
    gps::GradedSeries apply(const gps::GradedSeries& x) const;
    fgl::FglTable apply(const fgl::FglTable& f) const;
    classifying::RingPresentation apply(const classifying::RingPresentation& p) const;

    RElem generator_image(int i, int j) const;

private:
    fgl::FglTable target_;
    lazard::TableHandle table_;

    RElem mono_image(const lazard::AMono& m) const;
    RElem poly_image(const lazard::APoly& p) const;
};

// Omega -> CH: all a_ij to 0 (the additive law).
SpecializationMap chow_specialization(const lazard::TableHandle& table);

// Omega -> K: a_11 to -b, all other a_ij to 0 (the multiplicative law).
SpecializationMap ktheory_specialization(const lazard::TableHandle& table);

}  // namespace cobord::specialize
