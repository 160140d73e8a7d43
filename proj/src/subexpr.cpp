#include "gha/subexpr.hpp"

#include <algorithm>

namespace gha {

namespace {

void check_reduced(const std::vector<int>& word, GroupParams params) {
    Perm w = perm_identity(params.n);
    for (int g : word) {
        if (g < 0 || g + 1 >= params.n)
            throw std::invalid_argument("subexpressions: generator index out of range");
        w = perm_mult(w, Reflection(g, g + 1).as_perm(params.n));
    }
    if (perm_length(w) != static_cast<int>(word.size()))
        throw std::invalid_argument("subexpressions: word is not reduced");
}

void extend(const std::vector<int>& word, std::size_t j, GroupParams params,
            OmegaCache& omega, std::vector<GroupElement>& steps, int n_stat,
            std::vector<Subexpression>& out) {
    if (j == word.size()) {
        out.push_back(Subexpression{word, steps, n_stat});
        return;
    }
    const int gen = word[j];
    const GroupElement s = GroupElement::generator(params, gen);
    const GroupElement prev = steps.back(); // by value: steps reallocates below
    const GroupElement prev_s = prev * s;

    // s-step: x_j = x_{j-1} s_j, DS3 holds by reflexivity.
    steps.push_back(prev_s);
    extend(word, j + 1, params, omega, steps, n_stat, out);
    steps.pop_back();

    // X-steps: x_j = x_{j-1} d with d in X_{s_j} and x_j <= x_{j-1} s_j.
    for (const auto& d : x_set(params, Reflection(gen, gen + 1))) {
        GroupElement next = prev * d;
        if (!omega.leq(next, prev_s)) continue;
        steps.push_back(std::move(next));
        extend(word, j + 1, params, omega, steps, n_stat + 1, out);
        steps.pop_back();
    }
}

} // namespace

std::vector<Subexpression> enumerate_distinguished(const std::vector<int>& word,
                                                   GroupParams params,
                                                   OmegaCache& omega) {
    check_reduced(word, params);
    std::vector<Subexpression> out;
    std::vector<GroupElement> steps = {GroupElement::identity(params)};
    extend(word, 0, params, omega, steps, 0, out);
    return out;
}

std::vector<GroupElement> lower_ideal(const std::vector<int>& word,
                                      GroupParams params, OmegaCache& omega) {
    std::vector<GroupElement> out;
    for (const auto& sub : enumerate_distinguished(word, params, omega))
        out.push_back(sub.steps.back());
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GenericScalar r_star_closed(const GroupElement& y, const std::vector<int>& word,
                            GroupParams params, OmegaCache& omega) {
    GenericScalar sum;
    for (const auto& sub : enumerate_distinguished(word, params, omega))
        if (sub.steps.back() == y)
            sum += GenericScalar::monomial(sub.n_stat, -sub.n_stat, 1);
    return sum;
}

} // namespace gha
