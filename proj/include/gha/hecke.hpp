#pragma once

// The Hecke algebra of W·H_b in its T-basis, templated over the scalar ring.
//
// Elements are finitely supported maps T_x -> scalar.  Multiplication
// decomposes the right-hand basis factor as T_y = T_{d'}·T_{s_{i_1}}⋯T_{s_{i_p}}
// (diagonal first, then a reduced word) and applies the right
// multiplication rules stepwise:
//
//     T_x T_d = T_{xd}
//     T_x T_s = T_{xs}                        if l(xs) > l(x)
//     T_x T_s = T_{xs} + xi · sum_{d in X_s} T_{xd}   otherwise
//
// where xi = a·v^{-1} over the generic ring Z[a,v,v^{-1}] and
// xi = (v - v^{-1})/b over the specialized ring Z[1/b][v,v^{-1}].
// Basis elements are units; T_s^{-1} = T_s - xi · sum_{d in X_s} T_d, and the
// bar involution sends sum gamma_x T_x to sum bar(gamma_x) (T_{x^{-1}})^{-1}.

#include "gha/group.hpp"
#include "gha/scalars.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace gha {

template <class Scalar>
struct HeckeElement {
    GroupParams params;
    std::map<GroupElement, Scalar> support; // no zero scalars stored

    bool is_zero() const { return support.empty(); }

    void add_term(const GroupElement& x, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = support.emplace(x, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) support.erase(it);
        }
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        for (const auto& [x, c] : o.support) add_term(x, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        for (const auto& [x, c] : o.support) add_term(x, -c);
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.support == b.support;
    }

    Scalar coeff(const GroupElement& x) const {
        auto it = support.find(x);
        return it == support.end() ? Scalar{} : it->second;
    }
};

template <class Scalar>
HeckeElement<Scalar> scaled(const HeckeElement<Scalar>& h, const Scalar& c) {
    HeckeElement<Scalar> r{h.params, {}};
    if (c.is_zero()) return r;
    for (const auto& [x, g] : h.support) r.add_term(x, g * c);
    return r;
}

template <class Scalar>
class HeckeAlgebra {
public:
    using Element = HeckeElement<Scalar>;

    HeckeAlgebra(GroupParams params, Scalar xi, Scalar one)
        : params_(params), xi_(std::move(xi)), one_(std::move(one)) {
        for (int i = 0; i + 1 < params_.n; ++i)
            xsets_.push_back(x_set(params_, Reflection(i, i + 1)));
    }

    const GroupParams& params() const { return params_; }
    const Scalar& xi() const { return xi_; }
    const Scalar& one() const { return one_; }
    const DiagSet& xset(int gen) const { return xsets_.at(static_cast<std::size_t>(gen)); }

    Element zero() const { return Element{params_, {}}; }

    Element basis(const GroupElement& x) const {
        require_params(x);
        Element h{params_, {}};
        h.add_term(x, one_);
        return h;
    }

    Element identity() const { return basis(GroupElement::identity(params_)); }

    // h · T_d: support relabeling, scalars untouched.
    Element right_mul_diag(const Element& h, const GroupElement& d) const {
        Element r{params_, {}};
        for (const auto& [x, c] : h.support) r.add_term(x * d, c);
        return r;
    }

    Element left_mul_diag(const GroupElement& d, const Element& h) const {
        Element r{params_, {}};
        for (const auto& [x, c] : h.support) r.add_term(d * x, c);
        return r;
    }

    // h · T_{s_gen} by the right-hand quadratic rule.
    Element right_mul_gen(const Element& h, int gen) const {
        const GroupElement s = GroupElement::generator(params_, gen);
        Element r{params_, {}};
        for (const auto& [x, c] : h.support) {
            GroupElement xs = x * s;
            r.add_term(xs, c);
            if (length(xs) < length(x)) {
                Scalar cx = c * xi_;
                for (const auto& d : xsets_[static_cast<std::size_t>(gen)])
                    r.add_term(x * d, cx);
            }
        }
        return r;
    }

    // T_{s_gen} · h by the left-hand rule; used to cross-check the right rule.
    Element left_mul_gen(int gen, const Element& h) const {
        const GroupElement s = GroupElement::generator(params_, gen);
        Element r{params_, {}};
        for (const auto& [x, c] : h.support) {
            GroupElement sx = s * x;
            r.add_term(sx, c);
            if (length(sx) < length(x)) {
                Scalar cx = c * xi_;
                for (const auto& d : xsets_[static_cast<std::size_t>(gen)])
                    r.add_term(d * x, cx);
            }
        }
        return r;
    }

    // h · T_y for a single basis element, via T_y = T_{d'}·T_{word of w}.
    Element right_mul_basis(const Element& h, const GroupElement& y) const {
        require_params(y);
        const GroupElement dleft = conjugate_by_perm(y.perm(), y.d_part());
        Element r = right_mul_diag(h, dleft);
        for (int gen : reduced_word(y.perm())) r = right_mul_gen(r, gen);
        return r;
    }

    Element multiply(const Element& h1, const Element& h2) const {
        if (!(h1.params == params_) || !(h2.params == params_))
            throw std::invalid_argument("hecke multiply: mismatched parameters");
        Element r{params_, {}};
        for (const auto& [y, c] : h2.support)
            r += scaled(right_mul_basis(h1, y), c);
        return r;
    }

    // h · T_s^{-1} with T_s^{-1} = T_s - xi · sum_{d in X_s} T_d.
    Element right_mul_gen_inverse(const Element& h, int gen) const {
        Element r = right_mul_gen(h, gen);
        for (const auto& [x, c] : h.support) {
            Scalar cx = c * xi_;
            for (const auto& d : xsets_[static_cast<std::size_t>(gen)])
                r.add_term(x * d, -cx);
        }
        return r;
    }

    // (T_x)^{-1}, memoized: with x = w·d and w = s_{i_1}⋯s_{i_p} reduced,
    // T_x^{-1} = T_{d^{-1}} · T_{s_{i_p}}^{-1} ⋯ T_{s_{i_1}}^{-1}.
    // The cache inserts if absent; racing recomputations agree, so the map
    // stays deterministic under concurrent use.
    const Element& basis_inverse(const GroupElement& x) const {
        require_params(x);
        {
            std::scoped_lock lk(cache_mu_);
            auto it = inverse_cache_.find(x);
            if (it != inverse_cache_.end()) return it->second;
        }
        Element h = basis(inverse(x.d_part()));
        std::vector<int> word = reduced_word(x.perm());
        for (auto g = word.rbegin(); g != word.rend(); ++g)
            h = right_mul_gen_inverse(h, *g);
        std::scoped_lock lk(cache_mu_);
        return inverse_cache_.emplace(x, std::move(h)).first->second;
    }

    Element bar(const Element& h) const {
        Element r{params_, {}};
        for (const auto& [x, c] : h.support)
            r += scaled(basis_inverse(inverse(x)), gha::bar(c));
        return r;
    }

    Scalar tau(const Element& h) const {
        return h.coeff(GroupElement::identity(params_));
    }

private:
    void require_params(const GroupElement& x) const {
        if (!(x.params() == params_))
            throw std::invalid_argument("hecke: element has mismatched parameters");
    }

    GroupParams params_;
    Scalar xi_;
    Scalar one_;
    std::vector<DiagSet> xsets_;
    mutable std::mutex cache_mu_;
    mutable std::map<GroupElement, Element> inverse_cache_;
};

using GenericHecke = HeckeAlgebra<GenericScalar>;
using SpecializedHecke = HeckeAlgebra<SpecializedScalar>;

GenericHecke make_generic_algebra(GroupParams params);
SpecializedHecke make_specialized_algebra(GroupParams params);

// e_1 = sum_{d in H_b} t_d spans a central idempotent direction; t_w e_1 give
// an Iwahori-Hecke algebra of W with parameters b^n·q and b^{n+1}·a.  The
// check verifies, in the t-normalization t_x = v^{l(x)} T_x:
//   - e_1 commutes with every generator T_d, T_s,
//   - e_1^2 = b^n e_1,
//   - (t_s e_1)^2 = b^n q (t_1 e_1) + b^{n+1} a (t_s e_1) for every s.
struct E1Report {
    bool central_ok = false;
    bool idempotent_ok = false;
    bool quadratic_ok = false;
    std::string detail;
    bool pass() const { return central_ok && idempotent_ok && quadratic_ok; }
};
E1Report e1_check(const GenericHecke& alg);

} // namespace gha
