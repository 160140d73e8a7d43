#include "gha/hecke.hpp"

#include <sstream>

namespace gha {

GenericHecke make_generic_algebra(GroupParams params) {
    return GenericHecke(params, GenericScalar::monomial(1, -1, 1), GenericScalar(1));
}

SpecializedHecke make_specialized_algebra(GroupParams params) {
    // xi = (v - v^{-1}) / b
    SpecializedScalar xi(params.b);
    xi.add_term(1, 1, 1);
    xi.add_term(-1, -1, 1);
    return SpecializedHecke(params, std::move(xi),
                            SpecializedScalar::from_int(params.b, 1));
}

E1Report e1_check(const GenericHecke& alg) {
    const GroupParams params = alg.params();
    E1Report rep;

    HeckeElement<GenericScalar> e1 = alg.zero();
    for (const auto& d : all_diagonals(params))
        e1.add_term(d, alg.one());

    std::ostringstream detail;

    rep.central_ok = true;
    for (const auto& d : all_diagonals(params)) {
        auto g = alg.basis(d);
        if (!(alg.multiply(e1, g) == alg.multiply(g, e1))) {
            rep.central_ok = false;
            detail << "e1 does not commute with a diagonal generator; ";
            break;
        }
    }
    for (int i = 0; rep.central_ok && i + 1 < params.n; ++i) {
        auto g = alg.basis(GroupElement::generator(params, i));
        if (!(alg.multiply(e1, g) == alg.multiply(g, e1))) {
            rep.central_ok = false;
            detail << "e1 does not commute with s" << (i + 1) << "; ";
        }
    }

    BigInt bn = bigint_pow(params.b, params.n);
    rep.idempotent_ok =
        alg.multiply(e1, e1) == scaled(e1, GenericScalar::monomial(0, 0, bn));
    if (!rep.idempotent_ok) detail << "e1^2 != b^n e1; ";

    // (t_s e1)^2 = b^n q (t_1 e1) + b^{n+1} a (t_s e1), with t_s = v T_s.
    const GenericScalar q = GenericScalar::monomial(0, 2, 1);
    const GenericScalar v = GenericScalar::monomial(0, 1, 1);
    const GenericScalar a = GenericScalar::monomial(1, 0, 1);
    rep.quadratic_ok = true;
    for (int i = 0; i + 1 < params.n; ++i) {
        auto A = alg.multiply(alg.basis(GroupElement::generator(params, i)), e1);
        auto lhs = scaled(alg.multiply(A, A), q); // (vA)(vA) = v^2 A^2
        auto rhs = scaled(e1, q * GenericScalar::monomial(0, 0, bn));
        rhs += scaled(A, a * v * GenericScalar::monomial(0, 0, bn * params.b));
        if (!(lhs == rhs)) {
            rep.quadratic_ok = false;
            detail << "quadratic relation fails for s" << (i + 1) << "; ";
        }
    }

    rep.detail = detail.str();
    return rep;
}

} // namespace gha
