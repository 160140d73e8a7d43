#pragma once

// R*-polynomials and the partial order on W·H_b.
//
// R*_{x,y} is defined by the bar expansion bar(T_y) = sum_x bar(R*_{x,y}) T_x.
// It lies in N[a v^{-1}] with degree at most l(y) - l(x), and x <= y is
// declared when R*_{x,y} != 0.  Three independent routes are provided:
//
//   * RStarTable::r_star   — the two-term recursion on a left descent of y,
//     after stripping diagonal parts with R*_{x,yd} = R*_{xd^{-1},y};
//   * r_star_direct        — brute-force bar expansion of T_y in the algebra;
//   * r_star_closed        — the distinguished-subexpression sum (subexpr.hpp).
//
// The order is decided through the sets Omega_{w1,w2} = {d : R*_{w1 d, w2} != 0},
// which factor as products X_{t_1}⋯X_{t_r} along any length-increasing
// reflection chain from w1 to w2 in the Bruhat order.

#include "gha/group.hpp"
#include "gha/hecke.hpp"
#include "gha/scalars.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace gha {

// Omega sets, memoized per (w1, w2).  leq(x, y) is the fast-path order test.
class OmegaCache {
public:
    explicit OmegaCache(GroupParams params) : params_(params) {}

    const GroupParams& params() const { return params_; }

    // Empty iff w1 is not Bruhat-below w2; {1} when w1 = w2.
    const DiagSet& omega(const Perm& w1, const Perm& w2);

    // Length-increasing reflection chain w1·t_1⋯t_r = w2, greedy smallest
    // reflection first.  Empty optional when w1 is not Bruhat-below w2.
    std::optional<std::vector<Reflection>> reflection_chain(const Perm& w1,
                                                            const Perm& w2) const;

    bool leq(const GroupElement& x, const GroupElement& y);

private:
    GroupParams params_;
    std::map<std::pair<Perm, Perm>, DiagSet> cache_;
    std::mutex mu_;
};

// Product of the X-sets along an explicit chain (used by chain-independence
// tests; omega() picks its own chain).
DiagSet omega_from_chain(GroupParams params, const std::vector<Reflection>& chain);

// Memoized recursion for R*_{x,y}.  Safe for concurrent readers: the memo is
// a map with insert-if-absent semantics, and cell values are pure functions
// of the key, so racing recomputations agree.
class RStarTable {
public:
    explicit RStarTable(GroupParams params) : params_(params) {}

    const GroupParams& params() const { return params_; }
    GenericScalar r_star(const GroupElement& x, const GroupElement& y);

    // R_{x,y} = v^{l(y)-l(x)} specialize(R*_{x,y}); a polynomial in v^2.
    SpecializedScalar r_specialized(const GroupElement& x, const GroupElement& y);

    std::size_t memo_size() const { return memo_.size(); }

private:
    GenericScalar core(const GroupElement& x, const Perm& w);

    GroupParams params_;
    std::map<std::pair<GroupElement, Perm>, GenericScalar> memo_;
    std::mutex mu_;
};

// All nonzero R*_{x,y} for fixed y, read off the bar expansion of T_y.
std::map<GroupElement, GenericScalar> r_star_direct(const GenericHecke& alg,
                                                    const GroupElement& y);

// The enumerated poset with covering edges and connected components.
struct OrderPoset {
    GroupParams params;
    std::vector<GroupElement> elements;        // canonical order
    std::vector<std::vector<bool>> leq;        // leq[i][j] <=> elements[i] <= elements[j]
    std::vector<std::pair<int, int>> hasse_edges; // covering pairs (lower, upper)
    std::vector<int> component;                // component id per element
    int num_components = 0;

    int index_of(const GroupElement& x) const;
    std::vector<int> covers_of(int lower) const; // upper ends of covers of elements[lower]
};

inline constexpr std::size_t kDefaultPosetBound = 5000;

// Throws std::runtime_error when b^n·n! exceeds the bound.
OrderPoset build_poset(GroupParams params, OmegaCache& omega,
                       std::size_t max_elements = kDefaultPosetBound);

} // namespace gha
