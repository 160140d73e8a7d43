#pragma once

// Arithmetic and combinatorics of the monomial group G(b,1,n), realized as
// the semidirect product W ⋉ H_b where W = S_n acts on H_b = (Z/b)^n by
// permuting coordinates.  An element is stored in the canonical form w·d
// with w a permutation and d an exponent vector: position i of d holds the
// exponent m of the diagonal entry ζ^{a·m}, so only the cyclic structure of
// the underlying field enters and the core never touches field arithmetic.
//
// Also provides the classical combinatorics the rest of the library leans
// on: inversion length, reflections, the b-element subsets X_t of H_b, the
// subgroup X_0, reduced words, and the Bruhat-Chevalley order on W.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gha {

struct GroupParams {
    int n = 1; // matrix size, >= 1
    int b = 1; // order of the cyclic group, >= 1

    GroupParams() = default;
    GroupParams(int n_, int b_) : n(n_), b(b_) {
        if (n < 1 || b < 1)
            throw std::invalid_argument("GroupParams: need n >= 1 and b >= 1");
    }

    // |W·H_b| = b^n · n!
    std::uint64_t group_order() const;

    friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

using Perm = std::vector<int>; // perm[i] = image of i, 0-based

// ---- permutation helpers (pure W combinatorics) ----

Perm perm_identity(int n);
Perm perm_mult(const Perm& p, const Perm& q); // (p*q)(i) = p(q(i))
Perm perm_inverse(const Perm& p);
int perm_length(const Perm& p); // inversion count
bool perm_is_identity(const Perm& p);
std::vector<Perm> all_permutations(int n); // lexicographic order

// Classical Bruhat-Chevalley order on S_n (rank-matrix criterion).
bool bruhat_leq(const Perm& u, const Perm& w);

// Lexicographically smallest reduced word; entries are 0-based generator
// indices (i encodes the adjacent transposition of positions i, i+1).
std::vector<int> reduced_word(const Perm& w);

// The transposition (i j), 0-based with i < j.
struct Reflection {
    int i = 0;
    int j = 1;
    Reflection() = default;
    Reflection(int i_, int j_) : i(i_), j(j_) {
        if (i_ < 0 || i_ >= j_)
            throw std::invalid_argument("Reflection: need 0 <= i < j");
    }
    Perm as_perm(int n) const;
    friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

std::vector<Reflection> all_reflections(int n); // sorted

// ---- group elements ----

class GroupElement {
public:
    GroupElement(GroupParams params, Perm perm, std::vector<int> exps);

    static GroupElement identity(GroupParams params);
    // The Coxeter generator s_{i+1} (0-based index i, 0 <= i < n-1).
    static GroupElement generator(GroupParams params, int i);
    static GroupElement from_perm(GroupParams params, Perm w);
    // Exponents are reduced mod b.
    static GroupElement diagonal(GroupParams params, std::vector<int> exps);
    static GroupElement reflection(GroupParams params, const Reflection& t);

    const GroupParams& params() const { return params_; }
    const Perm& perm() const { return perm_; }
    const std::vector<int>& exps() const { return exps_; }

    bool is_identity() const;
    bool is_diagonal() const { return perm_is_identity(perm_); }

    GroupElement w_part() const; // w with trivial exponents
    GroupElement d_part() const; // d with trivial permutation

    // Ordering is lexicographic on (perm, exps); used for map keys.
    friend auto operator<=>(const GroupElement& x, const GroupElement& y) {
        if (auto c = x.perm_ <=> y.perm_; c != 0) return c;
        return x.exps_ <=> y.exps_;
    }
    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.perm_ == y.perm_ && x.exps_ == y.exps_;
    }

private:
    GroupParams params_;
    Perm perm_;
    std::vector<int> exps_;
};

// Semidirect-product law: (w1,d1)·(w2,d2) = (w1 w2, (w2^{-1} d1 w2)·d2).
// Throws std::invalid_argument on mismatched parameters.
GroupElement operator*(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

// Length of the W-part; invariant under H_b shifts on either side.
int length(const GroupElement& x);

// Conjugate w·x·w^{-1} for a permutation w.
GroupElement conjugate_by_perm(const Perm& w, const GroupElement& x);

// Monomial-matrix image: entry[r][c] = exponent mark in [0,b), or -1 if
// unmarked.  Exactly one mark per row and column; matrix multiplication of
// images agrees with the group law (used as a reference oracle in tests).
std::vector<std::vector<int>> to_monomial_matrix(const GroupElement& x);

// ---- subsets of H_b ----

// A finite set of diagonal elements, kept sorted and duplicate-free.
using DiagSet = std::vector<GroupElement>;

DiagSet make_diag_set(std::vector<GroupElement> elems);
bool diag_set_contains(const DiagSet& s, const GroupElement& d);
DiagSet diag_set_product(const DiagSet& s1, const DiagSet& s2);
DiagSet conjugate_diag_set(const Perm& w, const DiagSet& s);

// X_t for the reflection t = (i j): the b exponent vectors m·e_i + (c-m)·e_j
// with c = 0 for odd b and c = b/2 for even b (the exponent of (-1)^{b-1}).
// A subgroup of H_b iff b is odd, a coset of one otherwise.
DiagSet x_set(GroupParams params, const Reflection& t);

// X_0 = { m·e_1 : m in Z/b }, always a subgroup.
DiagSet x_zero(GroupParams params);

// H' = X_{s_1}·X_{s_2}⋯X_{s_{n-1}} (empty product = {1}).
DiagSet h_prime(GroupParams params);

DiagSet all_diagonals(GroupParams params); // all of H_b, sorted

// Canonical enumeration order for tables and output: by (length, perm, exps).
bool canonical_less(const GroupElement& x, const GroupElement& y);
std::vector<GroupElement> enumerate_group(GroupParams params);

} // namespace gha
