#include "cobord/specialize.hpp"

#include "cobord/errors.hpp"

namespace cobord::specialize {

SpecializationMap::SpecializationMap(fgl::FglTable target, lazard::TableHandle table)
    : target_(std::move(target)), table_(std::move(table))
{
    if (target_.order < table_->max_codegree() + 1)
        fail(ErrorKind::insufficient_table,
             "target law of order " + std::to_string(target_.order) +
                 " cannot specialize a table of depth " +
                 std::to_string(table_->max_codegree()));
    for (int d = 1; d <= table_->max_codegree(); ++d)
        for (const lazard::APoly& rel : table_->harvest().by_codegree[size_t(d)]) {
            RElem image = poly_image(rel);
            if (!image.is_zero())
                fail(ErrorKind::relation_not_killed,
                     "target table violates a formal group law axiom at codegree " +
                         std::to_string(d) + " (relation " + lazard::apoly_str(rel) +
                         " maps to " + image.str() + ")");
        }
}

RElem SpecializationMap::generator_image(int i, int j) const
{
    return target_.b(i, j);
}

RElem SpecializationMap::mono_image(const lazard::AMono& m) const
{
    RElem r = RElem::unit(target_.ring);
    for (auto& [g, e] : m.factors)
        for (int k = 0; k < e; ++k)
            r = r * target_.b(g.i, g.j);
    return r;
}

RElem SpecializationMap::poly_image(const lazard::APoly& p) const
{
    RElem r(target_.ring);
    for (auto& [m, c] : p)
        r = r + mono_image(m).scaled(c);
    return r;
}

RElem SpecializationMap::apply(const RElem& x) const
{
    if (lazard::table_of(x.ring()).get() != table_.get())
        fail(ErrorKind::mismatched_table, "element does not belong to this table");
    RElem out(target_.ring);
    out.set_truncated(x.truncated());
    for (auto& [d, coords] : x.components())
        for (size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] == 0)
                continue;
            out = out + poly_image(table_->basis(d)[k]).scaled(coords[k]);
        }
    return out;
}

gps::GradedSeries SpecializationMap::apply(const gps::GradedSeries& x) const
{
    gps::GradedSeries out(x.vars(), x.trunc(), target_.ring);
    out.set_truncated(x.truncated());
    for (auto& [mono, coeff] : x.terms())
        out.add_term(mono, apply(coeff));
    return out;
}

fgl::FglTable SpecializationMap::apply(const fgl::FglTable& f) const
{
    std::map<std::pair<int, int>, RElem> coeff;
    for (auto& [ij, c] : f.coeff) {
        RElem img = apply(c);
        if (!img.is_zero())
            coeff[ij] = img;
    }
    return fgl::custom_fgl(f.name + "@" + target_.name, target_.ring, f.order,
                           std::move(coeff));
}

classifying::RingPresentation SpecializationMap::apply(
    const classifying::RingPresentation& p) const
{
    classifying::RingPresentation out;
    out.name = p.name + "@" + target_.name;
    out.vars = p.vars;
    out.trunc = p.trunc;
    out.ring = target_.ring;
    for (const gps::GradedSeries& rel : p.relations)
        out.relations.push_back(apply(rel));
    return out;
}

SpecializationMap chow_specialization(const lazard::TableHandle& table)
{
    return SpecializationMap(fgl::additive_fgl(table->max_codegree() + 1), table);
}

SpecializationMap ktheory_specialization(const lazard::TableHandle& table)
{
    return SpecializationMap(fgl::multiplicative_fgl(table->max_codegree() + 1), table);
}

}  // namespace cobord::specialize
