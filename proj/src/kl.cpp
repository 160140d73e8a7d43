#include "gha/kl.hpp"

#include <algorithm>

namespace gha {

const KLTable::Column& KLTable::column(const GroupElement& y) {
    if (!(y.params() == params_))
        throw std::invalid_argument("kl: mismatched parameters");
    {
        std::scoped_lock lk(mu_);
        auto it = columns_.find(y);
        if (it != columns_.end()) return it->second;
    }

    Column col;
    for (const auto& x : enumerate_group(params_))
        if (omega_.leq(x, y)) col.ideal.push_back(x);
    // enumerate_group is canonical, so col.ideal is canonical; solve in
    // decreasing length from y downwards.
    col.pstar.emplace(y, SpecializedScalar::from_int(params_.b, 1));
    for (auto xi = col.ideal.rbegin(); xi != col.ideal.rend(); ++xi) {
        const GroupElement& x = *xi;
        if (x == y) continue;
        SpecializedScalar g = specialize(rstar_.r_star(x, y), params_.b);
        for (const auto& z : col.ideal) {
            if (z == x || z == y) continue;
            if (!omega_.leq(x, z)) continue;
            g += specialize(rstar_.r_star(x, z), params_.b) * col.pstar.at(z);
        }
        if (!(bar(g) == -g))
            throw std::logic_error("kl: defect term is not bar-antisymmetric");
        if (!(g.coeff(0).num == 0))
            throw std::logic_error("kl: defect term has nonzero v^0 coefficient");
        col.pstar.emplace(x, -g.negative_part());
    }
    std::scoped_lock lk(mu_);
    return columns_.emplace(y, std::move(col)).first->second;
}

SpecializedScalar KLTable::p_star(const GroupElement& x, const GroupElement& y) {
    const Column& col = column(y);
    auto it = col.pstar.find(x);
    return it == col.pstar.end() ? SpecializedScalar(params_.b) : it->second;
}

SpecializedScalar KLTable::p(const GroupElement& x, const GroupElement& y) {
    return p_star(x, y).shifted(length(y) - length(x));
}

HeckeElement<SpecializedScalar> KLTable::c_element(const GroupElement& y) {
    const Column& col = column(y);
    HeckeElement<SpecializedScalar> h{params_, {}};
    for (const auto& [x, c] : col.pstar) h.add_term(x, c);
    return h;
}

const std::vector<GroupElement>& KLTable::lower_ideal_of(const GroupElement& y) {
    return column(y).ideal;
}

std::vector<KLTable::DegreeViolation> KLTable::degree_violations(const GroupElement& y) {
    const Column& col = column(y);
    std::vector<DegreeViolation> out;
    for (const auto& [x, ps] : col.pstar) {
        if (x == y) continue;
        int expected = length(y) - length(x);
        int actual = ps.is_zero() ? 0 : -ps.min_v_degree();
        if (actual != expected) out.push_back({x, y, expected, actual});
    }
    return out;
}

} // namespace gha
