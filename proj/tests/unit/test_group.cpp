#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gha/checks.hpp"
#include "gha/group.hpp"
#include "gha/io.hpp"

#include <random>

using namespace gha;

namespace {
GroupElement el(GroupParams p, const std::string& expr) { return parse_element(expr, p); }
} // namespace

TEST_CASE("identity and multiplication basics") {
    GroupParams p(2, 2);
    auto e = GroupElement::identity(p);
    auto x = el(p, "s1*d(1,0)");
    CHECK(x * e == x);
    CHECK(e * x == x);

    // conjugating a diagonal by s1 swaps the exponents
    auto s1 = el(p, "s1");
    CHECK(s1 * el(p, "d(1,0)") * s1 == el(p, "d(0,1)"));
}

TEST_CASE("mismatched parameters are rejected") {
    auto x = GroupElement::identity(GroupParams(2, 2));
    auto y = GroupElement::identity(GroupParams(2, 3));
    CHECK_THROWS_AS(x * y, std::invalid_argument);
}

TEST_CASE("inverses") {
    GroupParams p(2, 2);
    CHECK(inverse(GroupElement::identity(p)) == GroupElement::identity(p));
    GroupParams p3(3, 4);
    auto d = el(p3, "d(1,2,3)");
    CHECK(inverse(d) == el(p3, "d(3,2,1)"));
    // (s1·d(1,0))^{-1} = d(1,0)·s1 = s1·d(0,1)
    CHECK(inverse(el(p, "s1*d(1,0)")) == el(p, "s1*d(0,1)"));
    CHECK(el(p, "d(1,0)*s1") == el(p, "s1*d(0,1)"));
}

TEST_CASE("length ignores the diagonal part") {
    GroupParams p(3, 3);
    CHECK(length(el(p, "d(0,1,2)")) == 0);
    CHECK(length(el(p, "s1*s2*s1")) == 3);
    CHECK(length(el(p, "s1*d(0,1,2)")) == 1);
}

TEST_CASE("x_set") {
    CHECK(x_set(GroupParams(2, 1), Reflection(0, 1)) ==
          DiagSet{GroupElement::identity(GroupParams(2, 1))});

    GroupParams p22(2, 2);
    CHECK(x_set(p22, Reflection(0, 1)) ==
          make_diag_set({el(p22, "d(1,0)"), el(p22, "d(0,1)")}));

    GroupParams p23(2, 3);
    CHECK(x_set(p23, Reflection(0, 1)) ==
          make_diag_set({el(p23, "d(0,0)"), el(p23, "d(1,2)"), el(p23, "d(2,1)")}));

    // 1 lies in X_s exactly when b is odd
    for (int b = 1; b <= 5; ++b) {
        GroupParams p(2, b);
        bool has_id = diag_set_contains(x_set(p, Reflection(0, 1)),
                                        GroupElement::identity(p));
        CHECK(has_id == (b % 2 == 1));
    }
}

TEST_CASE("x_zero and the product bijection") {
    CHECK(x_zero(GroupParams(2, 1)) == DiagSet{GroupElement::identity(GroupParams(2, 1))});
    GroupParams p32(3, 2);
    CHECK(x_zero(p32) == make_diag_set({el(p32, "d(0,0,0)"), el(p32, "d(1,0,0)")}));

    for (int n = 2; n <= 4; ++n)
        for (int b = 1; b <= 4; ++b) {
            CAPTURE(n);
            CAPTURE(b);
            CHECK(check_product_bijection(GroupParams(n, b)).pass);
        }
}

TEST_CASE("reduced words are lexicographically smallest") {
    CHECK(reduced_word(perm_identity(3)).empty());
    GroupParams p(3, 1);
    CHECK(reduced_word(el(p, "s1").perm()) == std::vector<int>{0});
    // the longest element of S_3 has two reduced words; 121 beats 212
    CHECK(reduced_word(el(p, "s1*s2*s1").perm()) == std::vector<int>{0, 1, 0});
    CHECK(el(p, "s1*s2*s1") == el(p, "s2*s1*s2"));

    // products of the word recover the permutation, with the right length
    std::mt19937 rng(7);
    for (int n = 2; n <= 5; ++n) {
        GroupParams pn(n, 1);
        for (int trial = 0; trial < 30; ++trial) {
            auto x = random_element(pn, rng);
            auto word = reduced_word(x.perm());
            CHECK(static_cast<int>(word.size()) == length(x));
            auto acc = GroupElement::identity(pn);
            for (int g : word) acc = acc * GroupElement::generator(pn, g);
            CHECK(acc.perm() == x.perm());
        }
    }
}

TEST_CASE("bruhat order on S_3") {
    GroupParams p(3, 1);
    auto s1 = el(p, "s1").perm();
    auto s2 = el(p, "s2").perm();
    auto s2s1 = el(p, "s2*s1").perm();
    auto w0 = el(p, "s1*s2*s1").perm();
    CHECK(bruhat_leq(s1, s1));
    CHECK(bruhat_leq(perm_identity(3), w0));
    CHECK(bruhat_leq(s1, s2s1));
    CHECK_FALSE(bruhat_leq(s1, s2));
    CHECK_FALSE(bruhat_leq(s2, s1));
    CHECK(bruhat_leq(s2, w0));
}

TEST_CASE("monomial matrices") {
    GroupParams p(2, 3);
    auto m_id = to_monomial_matrix(GroupElement::identity(p));
    CHECK(m_id == std::vector<std::vector<int>>{{0, -1}, {-1, 0}});
    CHECK(to_monomial_matrix(el(p, "d(1,2)")) ==
          std::vector<std::vector<int>>{{1, -1}, {-1, 2}});
    CHECK(to_monomial_matrix(el(p, "s1")) ==
          std::vector<std::vector<int>>{{-1, 0}, {0, -1}});

    std::mt19937 rng(11);
    for (int n = 2; n <= 3; ++n)
        for (int b = 1; b <= 3; ++b)
            CHECK(check_monomial_homomorphism(GroupParams(n, b), rng, true).pass);
}

TEST_CASE("group invariant suite at random sizes") {
    std::mt19937 rng(5);
    for (int n = 1; n <= 4; ++n)
        for (int b = 1; b <= 4; ++b) {
            GroupParams p(n, b);
            CAPTURE(n);
            CAPTURE(b);
            CHECK(check_group_associativity(p, rng, 60).pass);
            CHECK(check_length_invariance(p, rng, 40).pass);
            CHECK(check_group_inverses(p, rng, 40).pass);
            CHECK(check_xset_properties(p, rng, 20).pass);
            CHECK(check_hprime_contains(p, rng, 20).pass);
        }
}
