#pragma once

// Kazhdan-Lusztig basis and polynomials over the specialized ring
// Z[1/b][v, v^{-1}].  For each y there is a unique C_y with bar(C_y) = C_y
// and C_y = T_y modulo strictly negative v-degrees; writing
// C_y = sum_x P*_{x,y} T_x, the coefficients are computed for fixed y by
// descending induction on l(x) from
//
//     bar(P*_{x,y}) - P*_{x,y} = g,
//     g = R*_{x,y} + sum_{x < z < y} R*_{x,z} P*_{z,y},
//
// whose unique solution in v^{-1} Z[1/b][v^{-1}] is minus the strictly
// negative part of g.  Antisymmetry bar(g) = -g and vanishing of the v^0
// coefficient are internal consistency conditions; their failure signals an
// implementation bug, not a valid input state.  P_{x,y} = v^{l(y)-l(x)} P*_{x,y}
// is a polynomial in v^2.

#include "gha/group.hpp"
#include "gha/hecke.hpp"
#include "gha/rpoly.hpp"
#include "gha/scalars.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace gha {

class KLTable {
public:
    KLTable(GroupParams params, RStarTable& rstar, OmegaCache& omega)
        : params_(params), rstar_(rstar), omega_(omega) {}

    const GroupParams& params() const { return params_; }

    // P*_{x,y}; zero when x is not below y.
    SpecializedScalar p_star(const GroupElement& x, const GroupElement& y);

    // P_{x,y} = v^{l(y)-l(x)} P*_{x,y}.
    SpecializedScalar p(const GroupElement& x, const GroupElement& y);

    HeckeElement<SpecializedScalar> c_element(const GroupElement& y);

    // Elements below y, sorted canonically (the support of the y-column).
    const std::vector<GroupElement>& lower_ideal_of(const GroupElement& y);

    // The expected v^{-1}-degree of P*_{x,y} for x < y is l(y) - l(x); this
    // is reported, not asserted.
    struct DegreeViolation {
        GroupElement x, y;
        int expected;
        int actual; // v^{-1}-degree found, 0 when P* vanished
    };
    std::vector<DegreeViolation> degree_violations(const GroupElement& y);

private:
    struct Column {
        std::vector<GroupElement> ideal; // canonical order
        std::map<GroupElement, SpecializedScalar> pstar;
    };
    const Column& column(const GroupElement& y);

    GroupParams params_;
    RStarTable& rstar_;
    OmegaCache& omega_;
    std::mutex mu_;
    std::map<GroupElement, Column> columns_;
};

} // namespace gha
