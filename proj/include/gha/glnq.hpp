#pragma once

// Brute-force ground truth inside GL_n(F_q) for small prime q.
//
// With ab = q-1 coprime, B_a = H_a·U, and W·H_b a complete set of
// (B_a, B_a)-double coset representatives, the double-coset algebra has
// structure constants
//
//     mu_{x,y,z} = |B_a|^{-1} |D_x ∩ z·D_y^{-1}|,
//
// and the whole multiplication table must agree with the generic algebra
// specialized at v^2 = q.  The oracle enumerates the group, builds the
// double-coset partition, counts the mu's, verifies the strong Bruhat
// uniqueness decomposition and the rank-one (sl2) computations, and compares
// the mu table against the symbolic product of basis elements.

#include "gha/group.hpp"
#include "gha/hecke.hpp"
#include "gha/scalars.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gha {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // witness on failure, empty or summary otherwise
};

struct FieldParams {
    int q = 2;    // prime
    int a = 1;    // ab = q-1, gcd(a,b) = 1
    int b = 1;
    int zeta = 1; // smallest primitive root mod q

    // Validates primality, the coprime factorization, and picks zeta.
    static FieldParams create(int q, int a);
};

class GlnOracle {
public:
    // Enumerates GL_n(F_q), its subgroups, and the double-coset partition.
    // Guarded by q^{n^2} <= max_codes (the encoding table size).
    GlnOracle(int n, FieldParams field, std::size_t max_codes = 1u << 25);

    int n() const { return n_; }
    const FieldParams& field() const { return field_; }
    GroupParams group_params() const { return GroupParams(n_, field_.b); }

    std::size_t group_size() const { return group_size_; }
    std::size_t unipotent_size() const { return u_.size(); }
    std::size_t b_a_size() const { return b_a_.size(); }
    const std::vector<GroupElement>& reps() const { return reps_; }
    bool partition_ok() const { return partition_ok_; }

    // mu_{x,y,z} by direct intersection counting; requires the partition.
    std::int64_t mu(const GroupElement& x, const GroupElement& y,
                    const GroupElement& z) const;

    // For u = [[1, zeta^c],[0,1]] with 0 < c < q-1, the factorization
    // sus = u1·s·h_b·h_a·u2 with h_b in H_b and h_a in H_a, where
    // c = a·m + b·n mod (q-1), 0 <= m < b, 0 <= n < a.  2x2 matrices,
    // row-major; n = 2 only.
    struct Sl2Decomposition {
        std::vector<int> u1, hb, ha, u2;
        int m = 0;
        int n = 0;
    };
    Sl2Decomposition sl2_decompose(int c) const;

    // The monomial embedding of W·H_b is an injective homomorphism.
    CheckResult check_isomorphism() const;
    // Double cosets partition G and are counted by b^n·n!.
    CheckResult check_double_cosets() const;
    // G = ∐_w U^-_{w^{-1}}·w·H_b·H_a·U with unique factorization.
    CheckResult check_bruhat_uniqueness() const;
    // The rank-one decomposition sus = u_1 s h_b h_a u_2 for every c, and the
    // a-element equivalence classes on U_s^-.  n = 2 only.
    CheckResult check_sl2() const;
    // Full mu table == generic algebra at (a, v^2 = q), in the t-basis.
    CheckResult check_mult_theorem() const;
    // sum_z mu_{x,y,z} |D_z| = |D_x||D_y|/|B_a| on sampled pairs.
    CheckResult check_total_mass(std::mt19937& rng, int samples = 20) const;

    std::vector<CheckResult> run_standard_checks(std::mt19937& rng) const;

private:
    using Mat = std::vector<int>; // n*n entries mod q, row-major

    int code_of(const Mat& m) const;
    Mat mat_of_code(int code) const;
    Mat mul(const Mat& x, const Mat& y) const;
    Mat inv(const Mat& m) const;
    bool invertible(const Mat& m) const;
    Mat monomial_mat(const GroupElement& x) const;

    void enumerate_all();
    void build_double_cosets();

    int n_;
    FieldParams field_;
    std::vector<int> pow_zeta_;   // zeta^i mod q, i in [0, q-1)
    std::vector<int> dlog_;       // dlog_[x] for x in [1, q)

    std::size_t group_size_ = 0;
    std::vector<int> u_;          // codes of U
    std::vector<int> h_a_;        // codes of H_a
    std::vector<int> h_b_;        // codes of H_b
    std::vector<int> b_a_;        // codes of B_a = H_a·U
    std::vector<GroupElement> reps_;      // canonical order
    std::vector<int> rep_codes_;          // monomial-matrix codes of reps_
    std::vector<std::int32_t> coset_id_;  // per code: rep index, -1 outside G
    std::vector<std::vector<int>> coset_members_;
    bool partition_ok_ = false;
    std::string partition_detail_;
};

} // namespace gha
