#pragma once

// Distinguished subexpressions along a reduced word (s_1, ..., s_p): tuples
// (x_0, ..., x_p) with x_0 = 1, each step x_{j-1}^{-1} x_j either the letter
// s_j itself or an element of X_{s_j}, and x_j <= x_{j-1} s_j in the partial
// order.  The statistic n(x) counts the X-steps.  The last components sweep
// out the lower order ideal of w = s_1⋯s_p, and
//
//     R*_{y,w} = sum over the fiber over y of (a v^{-1})^{n(x)},
//
// which is the closed-form route to the R*-polynomials.

#include "gha/group.hpp"
#include "gha/rpoly.hpp"
#include "gha/scalars.hpp"

#include <vector>

namespace gha {

struct Subexpression {
    std::vector<int> word;            // 0-based generator indices
    std::vector<GroupElement> steps;  // x_0 = 1, ..., x_p
    int n_stat = 0;                   // number of X-steps
};

// Depth-first enumeration, deterministic: at each letter the s-step is tried
// first, then the X-steps in exponent-lexicographic order.  Throws
// std::invalid_argument when the word is not reduced.
std::vector<Subexpression> enumerate_distinguished(const std::vector<int>& word,
                                                   GroupParams params,
                                                   OmegaCache& omega);

// {π(x) : x distinguished} = the lower order ideal of the word's product.
std::vector<GroupElement> lower_ideal(const std::vector<int>& word,
                                      GroupParams params, OmegaCache& omega);

// Closed formula for R*_{y, w} with w the product of the (reduced) word.
GenericScalar r_star_closed(const GroupElement& y, const std::vector<int>& word,
                            GroupParams params, OmegaCache& omega);

} // namespace gha
