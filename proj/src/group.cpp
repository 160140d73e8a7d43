#include "gha/group.hpp"

#include <algorithm>
#include <numeric>

namespace gha {

std::uint64_t GroupParams::group_order() const {
    std::uint64_t m = 1;
    for (int i = 2; i <= n; ++i) m *= static_cast<std::uint64_t>(i);
    for (int i = 0; i < n; ++i) m *= static_cast<std::uint64_t>(b);
    return m;
}

Perm perm_identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_mult(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

int perm_length(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

bool perm_is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
    // u <= w iff |{k <= i : u(k) >= j}| <= |{k <= i : w(k) >= j}| for all i,j.
    const int n = static_cast<int>(u.size());
    if (w.size() != u.size())
        throw std::invalid_argument("bruhat_leq: rank mismatch");
    for (int j = 0; j < n; ++j) {
        int cu = 0, cw = 0;
        for (int i = 0; i < n; ++i) {
            if (u[static_cast<std::size_t>(i)] >= j) ++cu;
            if (w[static_cast<std::size_t>(i)] >= j) ++cw;
            if (cu > cw) return false;
        }
    }
    return true;
}

std::vector<int> reduced_word(const Perm& w) {
    // Greedy smallest left descent; first-letter dominance makes the result
    // the lexicographically smallest reduced word.
    std::vector<int> word;
    Perm u = w;
    Perm uinv = perm_inverse(u);
    const int n = static_cast<int>(w.size());
    while (!perm_is_identity(u)) {
        int s = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (uinv[static_cast<std::size_t>(i)] > uinv[static_cast<std::size_t>(i + 1)]) {
                s = i;
                break;
            }
        }
        word.push_back(s);
        // u <- s_i u swaps the values i, i+1 in u.
        std::swap(uinv[static_cast<std::size_t>(s)], uinv[static_cast<std::size_t>(s + 1)]);
        u = perm_inverse(uinv);
    }
    return word;
}

Perm Reflection::as_perm(int n) const {
    if (j >= n) throw std::invalid_argument("Reflection: position out of range");
    Perm p = perm_identity(n);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    return p;
}

std::vector<Reflection> all_reflections(int n) {
    std::vector<Reflection> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

GroupElement::GroupElement(GroupParams params, Perm perm, std::vector<int> exps)
    : params_(params), perm_(std::move(perm)), exps_(std::move(exps)) {
    if (static_cast<int>(perm_.size()) != params_.n ||
        static_cast<int>(exps_.size()) != params_.n)
        throw std::invalid_argument("GroupElement: size mismatch with params");
    std::vector<char> seen(static_cast<std::size_t>(params_.n), 0);
    for (int v : perm_) {
        if (v < 0 || v >= params_.n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("GroupElement: invalid permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int& e : exps_) {
        e %= params_.b;
        if (e < 0) e += params_.b;
    }
}

GroupElement GroupElement::identity(GroupParams params) {
    return GroupElement(params, perm_identity(params.n),
                        std::vector<int>(static_cast<std::size_t>(params.n), 0));
}

GroupElement GroupElement::generator(GroupParams params, int i) {
    if (i < 0 || i + 1 >= params.n)
        throw std::invalid_argument("generator index out of range");
    return reflection(params, Reflection(i, i + 1));
}

GroupElement GroupElement::from_perm(GroupParams params, Perm w) {
    return GroupElement(params, std::move(w),
                        std::vector<int>(static_cast<std::size_t>(params.n), 0));
}

GroupElement GroupElement::diagonal(GroupParams params, std::vector<int> exps) {
    return GroupElement(params, perm_identity(params.n), std::move(exps));
}

GroupElement GroupElement::reflection(GroupParams params, const Reflection& t) {
    return from_perm(params, t.as_perm(params.n));
}

bool GroupElement::is_identity() const {
    if (!perm_is_identity(perm_)) return false;
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

GroupElement GroupElement::w_part() const {
    return from_perm(params_, perm_);
}

GroupElement GroupElement::d_part() const {
    return diagonal(params_, exps_);
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    if (!(x.params() == y.params()))
        throw std::invalid_argument("group multiply: mismatched (n,b) parameters");
    const GroupParams& pr = x.params();
    Perm perm = perm_mult(x.perm(), y.perm());
    // (w1 d1)(w2 d2) = (w1 w2)·((w2^{-1} d1 w2) d2); conjugation by w2^{-1}
    // reads the exponent of d1 at position w2(i).
    std::vector<int> exps(static_cast<std::size_t>(pr.n));
    for (int i = 0; i < pr.n; ++i) {
        int from = y.perm()[static_cast<std::size_t>(i)];
        exps[static_cast<std::size_t>(i)] =
            (x.exps()[static_cast<std::size_t>(from)] + y.exps()[static_cast<std::size_t>(i)]) % pr.b;
    }
    return GroupElement(pr, std::move(perm), std::move(exps));
}

GroupElement inverse(const GroupElement& x) {
    const GroupParams& pr = x.params();
    Perm winv = perm_inverse(x.perm());
    std::vector<int> exps(static_cast<std::size_t>(pr.n));
    for (int j = 0; j < pr.n; ++j) {
        int from = winv[static_cast<std::size_t>(j)];
        exps[static_cast<std::size_t>(j)] =
            (pr.b - x.exps()[static_cast<std::size_t>(from)]) % pr.b;
    }
    return GroupElement(pr, std::move(winv), std::move(exps));
}

int length(const GroupElement& x) { return perm_length(x.perm()); }

GroupElement conjugate_by_perm(const Perm& w, const GroupElement& x) {
    GroupElement we = GroupElement::from_perm(x.params(), w);
    return we * x * inverse(we);
}

std::vector<std::vector<int>> to_monomial_matrix(const GroupElement& x) {
    const int n = x.params().n;
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int c = 0; c < n; ++c)
        m[static_cast<std::size_t>(x.perm()[static_cast<std::size_t>(c)])]
         [static_cast<std::size_t>(c)] = x.exps()[static_cast<std::size_t>(c)];
    return m;
}

DiagSet make_diag_set(std::vector<GroupElement> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

bool diag_set_contains(const DiagSet& s, const GroupElement& d) {
    return std::binary_search(s.begin(), s.end(), d);
}

DiagSet diag_set_product(const DiagSet& s1, const DiagSet& s2) {
    std::vector<GroupElement> out;
    out.reserve(s1.size() * s2.size());
    for (const auto& d1 : s1)
        for (const auto& d2 : s2) out.push_back(d1 * d2);
    return make_diag_set(std::move(out));
}

DiagSet conjugate_diag_set(const Perm& w, const DiagSet& s) {
    std::vector<GroupElement> out;
    out.reserve(s.size());
    for (const auto& d : s) out.push_back(conjugate_by_perm(w, d));
    return make_diag_set(std::move(out));
}

DiagSet x_set(GroupParams params, const Reflection& t) {
    if (t.j >= params.n)
        throw std::invalid_argument("x_set: reflection out of range");
    const int b = params.b;
    const int c = (b % 2 == 0) ? b / 2 : 0; // exponent of (-1)^{b-1} in F_b
    std::vector<GroupElement> out;
    for (int m = 0; m < b; ++m) {
        std::vector<int> exps(static_cast<std::size_t>(params.n), 0);
        exps[static_cast<std::size_t>(t.i)] = m;
        exps[static_cast<std::size_t>(t.j)] = ((c - m) % b + b) % b;
        out.push_back(GroupElement::diagonal(params, std::move(exps)));
    }
    return make_diag_set(std::move(out));
}

DiagSet x_zero(GroupParams params) {
    std::vector<GroupElement> out;
    for (int m = 0; m < params.b; ++m) {
        std::vector<int> exps(static_cast<std::size_t>(params.n), 0);
        exps[0] = m;
        out.push_back(GroupElement::diagonal(params, std::move(exps)));
    }
    return make_diag_set(std::move(out));
}

DiagSet h_prime(GroupParams params) {
    DiagSet acc = {GroupElement::identity(params).d_part()};
    for (int i = 0; i + 1 < params.n; ++i)
        acc = diag_set_product(acc, x_set(params, Reflection(i, i + 1)));
    return acc;
}

DiagSet all_diagonals(GroupParams params) {
    std::vector<GroupElement> out;
    std::vector<int> exps(static_cast<std::size_t>(params.n), 0);
    while (true) {
        out.push_back(GroupElement::diagonal(params, exps));
        int pos = params.n - 1;
        while (pos >= 0 && ++exps[static_cast<std::size_t>(pos)] == params.b) {
            exps[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return make_diag_set(std::move(out));
}

bool canonical_less(const GroupElement& x, const GroupElement& y) {
    int lx = length(x), ly = length(y);
    if (lx != ly) return lx < ly;
    return x < y;
}

std::vector<GroupElement> enumerate_group(GroupParams params) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(params.group_order()));
    const DiagSet diags = all_diagonals(params);
    for (const Perm& w : all_permutations(params.n))
        for (const auto& d : diags)
            out.push_back(GroupElement::from_perm(params, w) * d);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace gha
