#include "gha/rpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gha {

const DiagSet& OmegaCache::omega(const Perm& w1, const Perm& w2) {
    std::scoped_lock lk(mu_);
    auto key = std::make_pair(w1, w2);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    DiagSet result;
    if (w1 == w2) {
        result = {GroupElement::identity(params_).d_part()};
    } else if (bruhat_leq(w1, w2)) {
        auto chain = reflection_chain(w1, w2);
        result = omega_from_chain(params_, *chain);
    }
    return cache_.emplace(std::move(key), std::move(result)).first->second;
}

std::optional<std::vector<Reflection>> OmegaCache::reflection_chain(
    const Perm& w1, const Perm& w2) const {
    if (!bruhat_leq(w1, w2)) return std::nullopt;
    std::vector<Reflection> chain;
    Perm v = w1;
    const auto refls = all_reflections(params_.n);
    while (v != w2) {
        bool advanced = false;
        for (const auto& t : refls) {
            Perm vt = perm_mult(v, t.as_perm(params_.n));
            if (perm_length(vt) == perm_length(v) + 1 && bruhat_leq(vt, w2)) {
                chain.push_back(t);
                v = std::move(vt);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::logic_error("reflection_chain: no step found (Bruhat chain property violated)");
    }
    return chain;
}

DiagSet omega_from_chain(GroupParams params, const std::vector<Reflection>& chain) {
    DiagSet acc = {GroupElement::identity(params).d_part()};
    for (const auto& t : chain) acc = diag_set_product(acc, x_set(params, t));
    return acc;
}

bool OmegaCache::leq(const GroupElement& x, const GroupElement& y) {
    if (!(x.params() == params_) || !(y.params() == params_))
        throw std::invalid_argument("leq: mismatched parameters");
    GroupElement d = x.d_part() * inverse(y.d_part());
    return diag_set_contains(omega(x.perm(), y.perm()), d);
}

GenericScalar RStarTable::r_star(const GroupElement& x, const GroupElement& y) {
    if (!(x.params() == params_) || !(y.params() == params_))
        throw std::invalid_argument("r_star: mismatched parameters");
    // Strip the diagonal part of y: R*_{x, w d} = R*_{x d^{-1}, w}.
    return core(x * inverse(y.d_part()), y.perm());
}

GenericScalar RStarTable::core(const GroupElement& x, const Perm& w) {
    if (perm_is_identity(w))
        return x.is_identity() ? GenericScalar(1) : GenericScalar();

    {
        std::scoped_lock lk(mu_);
        auto it = memo_.find({x, w});
        if (it != memo_.end()) return it->second;
    }

    // Smallest left descent of w; pivot choice does not affect the value.
    int s = -1;
    const Perm winv = perm_inverse(w);
    for (int i = 0; i + 1 < params_.n; ++i) {
        if (winv[static_cast<std::size_t>(i)] > winv[static_cast<std::size_t>(i + 1)]) {
            s = i;
            break;
        }
    }
    const GroupElement se = GroupElement::generator(params_, s);
    Perm sw = perm_mult(se.perm(), w);
    GroupElement sx = se * x;

    GenericScalar res;
    if (length(sx) < length(x)) {
        res = core(sx, sw);
    } else {
        res = core(sx, sw);
        GenericScalar tail;
        for (const auto& d : x_set(params_, Reflection(s, s + 1)))
            tail += core(d * x, sw);
        res += GenericScalar::monomial(1, -1, 1) * tail;
    }

    std::scoped_lock lk(mu_);
    return memo_.emplace(std::make_pair(x, w), std::move(res)).first->second;
}

SpecializedScalar RStarTable::r_specialized(const GroupElement& x, const GroupElement& y) {
    GenericScalar rs = r_star(x, y);
    return specialize(rs, params_.b).shifted(length(y) - length(x));
}

std::map<GroupElement, GenericScalar> r_star_direct(const GenericHecke& alg,
                                                    const GroupElement& y) {
    // bar(T_y) = (T_{y^{-1}})^{-1} = sum_x bar(R*_{x,y}) T_x.
    const auto& expansion = alg.basis_inverse(inverse(y));
    std::map<GroupElement, GenericScalar> out;
    for (const auto& [x, c] : expansion.support) out.emplace(x, bar(c));
    return out;
}

int OrderPoset::index_of(const GroupElement& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x, canonical_less);
    if (it == elements.end() || !(*it == x))
        throw std::invalid_argument("OrderPoset: element not found");
    return static_cast<int>(it - elements.begin());
}

std::vector<int> OrderPoset::covers_of(int lower) const {
    std::vector<int> out;
    for (const auto& [lo, hi] : hasse_edges)
        if (lo == lower) out.push_back(hi);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int i) {
        while (parent[static_cast<std::size_t>(i)] != i) {
            parent[static_cast<std::size_t>(i)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
            i = parent[static_cast<std::size_t>(i)];
        }
        return i;
    }
    void unite(int i, int j) { parent[static_cast<std::size_t>(find(i))] = find(j); }
};

} // namespace

OrderPoset build_poset(GroupParams params, OmegaCache& omega, std::size_t max_elements) {
    if (params.group_order() > max_elements)
        throw std::runtime_error("build_poset: b^n·n! exceeds the enumeration bound");

    OrderPoset poset;
    poset.params = params;
    poset.elements = enumerate_group(params);
    const int n = static_cast<int>(poset.elements.size());

    poset.leq.assign(static_cast<std::size_t>(n),
                     std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (omega.leq(poset.elements[static_cast<std::size_t>(i)],
                          poset.elements[static_cast<std::size_t>(j)]))
                poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

    // Covering pairs by transitive reduction; elements are sorted by length,
    // so candidate intermediates lie between the endpoints' indices.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                continue;
            bool cover = true;
            for (int k = i + 1; k < j && cover; ++k)
                if (poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    poset.leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    cover = false;
            if (cover) poset.hasse_edges.emplace_back(i, j);
        }
    }
    std::sort(poset.hasse_edges.begin(), poset.hasse_edges.end());

    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                uf.unite(i, j);
    poset.component.assign(static_cast<std::size_t>(n), -1);
    int next_id = 0;
    std::map<int, int> root_to_id;
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        auto [it, inserted] = root_to_id.emplace(r, next_id);
        if (inserted) ++next_id;
        poset.component[static_cast<std::size_t>(i)] = it->second;
    }
    poset.num_components = next_id;
    return poset;
}

} // namespace gha
