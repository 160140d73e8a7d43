#pragma once

// The invariant suite behind `selftest` and the acceptance tests: each check
// exercises one contract (group law, X-set identities, Hecke relations, the
// three R*-routes, poset axioms, KL solve integrity, ...) at a given size
// and reports pass/fail with a witness.  Checks whose sizes would explode
// are sampled with a caller-provided generator; everything is exact.

#include "gha/glnq.hpp" // CheckResult
#include "gha/group.hpp"

#include <random>
#include <vector>

namespace gha {

GroupElement random_element(GroupParams params, std::mt19937& rng);

// group_core
CheckResult check_group_associativity(GroupParams p, std::mt19937& rng, int samples = 200);
CheckResult check_monomial_homomorphism(GroupParams p, std::mt19937& rng, bool exhaustive);
CheckResult check_length_invariance(GroupParams p, std::mt19937& rng, int samples = 100);
CheckResult check_group_inverses(GroupParams p, std::mt19937& rng, int samples = 100);
CheckResult check_xset_properties(GroupParams p, std::mt19937& rng, int tuples = 40);
CheckResult check_product_bijection(GroupParams p);
CheckResult check_hprime_contains(GroupParams p, std::mt19937& rng, int tuples = 40);

// laurent_scalars
CheckResult check_scalar_bar_involution(std::mt19937& rng, int samples = 200);
CheckResult check_specialize_commutes(int b, std::mt19937& rng, int samples = 200);

// hecke_algebra
CheckResult check_hecke_associativity(GroupParams p, std::mt19937& rng, int samples = 25);
CheckResult check_hecke_identity(GroupParams p, std::mt19937& rng, int samples = 25);
CheckResult check_left_right_rules(GroupParams p);
CheckResult check_quadratic_relation(GroupParams p);
CheckResult check_tau(GroupParams p, std::mt19937& rng, bool exhaustive, int samples = 200);
CheckResult check_bar_element(GroupParams p, std::mt19937& rng, int samples = 15);
CheckResult check_basis_inverses(GroupParams p);
CheckResult check_e1(GroupParams p);

// rpoly_order
CheckResult check_rstar_three_way(GroupParams p, std::mt19937& rng, bool exhaustive,
                                  int samples = 150);
CheckResult check_rstar_degree_positivity(GroupParams p, std::mt19937& rng, int samples = 200);
CheckResult check_r_even_polynomial(GroupParams p, std::mt19937& rng, int samples = 200);
CheckResult check_rstar_shifts(GroupParams p, std::mt19937& rng, int samples = 150);
CheckResult check_rstar_pivot_free(GroupParams p, std::mt19937& rng, int samples = 40);
CheckResult check_poset_axioms(GroupParams p);
CheckResult check_omega_chain_independence(GroupParams p, std::mt19937& rng, int samples = 60);
CheckResult check_omega_composition(GroupParams p, std::mt19937& rng, int samples = 60);

// subexpressions
CheckResult check_subexpr_lower_ideal(GroupParams p);
CheckResult check_subexpr_word_independence(GroupParams p, std::mt19937& rng, int samples = 20);
CheckResult check_subexpr_parity(GroupParams p); // report-only flag
CheckResult check_subexpr_fiber_counts(GroupParams p);

// kl_basis
CheckResult check_kl_bar_invariance(GroupParams p);
CheckResult check_kl_shift_identities(GroupParams p);
CheckResult check_kl_unitriangular(GroupParams p);
CheckResult check_kl_degree_flag(GroupParams p); // report-only flag

// cli plumbing
CheckResult check_parse_roundtrip(GroupParams p, std::mt19937& rng, int samples = 200);

// The full suite at one size, with per-check feasibility guards.
std::vector<CheckResult> run_selftest(GroupParams p, unsigned seed = 20240811);

} // namespace gha
